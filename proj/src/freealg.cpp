#include "nclift/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

#include "nclift/errors.hpp"

namespace nclift {

bool DeglexLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string generator_name(std::size_t r, std::size_t i) { return r == 1 ? "t" : "t" + std::to_string(i); }

std::string word_name(std::size_t r, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += generator_name(r, w[i]);
  }
  return out;
}

std::vector<Word> monomials(std::size_t r, std::size_t deg) {
  const WordIndex idx(r, deg);
  std::vector<Word> out;
  for (std::size_t i = idx.offset(deg); i < idx.size(); ++i) out.push_back(idx.word(i));
  return out;
}

// ---------------------------------------------------------------------------
// WordIndex

WordIndex::WordIndex(std::size_t r, std::size_t order) : r_(r), n_(order), offset_(order + 2), pow_(order + 2) {
  pow_[0] = 1;
  for (std::size_t d = 1; d < pow_.size(); ++d) pow_[d] = pow_[d - 1] * r;
  offset_[0] = 0;
  for (std::size_t d = 1; d < offset_.size(); ++d) offset_[d] = offset_[d - 1] + pow_[d - 1];
}

std::size_t WordIndex::degree(std::size_t idx) const {
  auto it = std::upper_bound(offset_.begin(), offset_.end(), idx);
  return static_cast<std::size_t>(it - offset_.begin()) - 1;
}

std::size_t WordIndex::index(const Word& w) const {
  if (w.size() > n_) throw std::out_of_range("word longer than the truncation order");
  std::size_t v = 0;
  for (auto g : w) {
    if (g >= r_) throw std::out_of_range("generator index out of range");
    v = v * r_ + g;
  }
  return offset_[w.size()] + v;
}

Word WordIndex::word(std::size_t idx) const {
  const std::size_t d = degree(idx);
  std::size_t v = idx - offset_[d];
  Word w(d);
  for (std::size_t i = d; i-- > 0;) {
    w[i] = static_cast<std::uint32_t>(v % r_);
    v /= r_;
  }
  return w;
}

std::optional<std::size_t> WordIndex::concat(std::size_t a, std::size_t b) const {
  const std::size_t da = degree(a), db = degree(b);
  if (da + db > n_) return std::nullopt;
  return offset_[da + db] + (a - offset_[da]) * pow_[db] + (b - offset_[db]);
}

std::optional<std::size_t> WordIndex::left_mul(std::size_t gen, std::size_t idx) const {
  const std::size_t d = degree(idx);
  if (d + 1 > n_) return std::nullopt;
  return offset_[d + 1] + gen * pow_[d] + (idx - offset_[d]);
}

std::optional<std::size_t> WordIndex::right_mul(std::size_t idx, std::size_t gen) const {
  const std::size_t d = degree(idx);
  if (d + 1 > n_) return std::nullopt;
  return offset_[d + 1] + (idx - offset_[d]) * r_ + gen;
}

Vec series_mul(const WordIndex& idx, std::span<const Scalar> a, std::span<const Scalar> b) {
  const Field k = a.empty() ? Field{} : a[0].field();
  Vec out = zero_vec(k, idx.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      if (auto w = idx.concat(i, j)) out[*w] += a[i] * b[j];
    }
  }
  return out;
}

Vec resize_order(const WordIndex& to, std::span<const Scalar> v) {
  const Field k = v.empty() ? Field{} : v[0].field();
  Vec out = zero_vec(k, to.size());
  std::copy_n(v.begin(), std::min(v.size(), out.size()), out.begin());
  return out;
}

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries TruncSeries::from_vec(const Field& k, const WordIndex& idx, std::span<const Scalar> v) {
  TruncSeries s(k, idx.generators(), idx.order());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.terms_.emplace(idx.word(i), v[i]);
  return s;
}

namespace {

Word parse_word(std::size_t r, std::string_view text, std::string_view whole) {
  Word w;
  if (text == "1") return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t dot = std::min(text.find('.', pos), text.size());
    std::string_view g = text.substr(pos, dot - pos);
    if (g.empty() || g[0] != 't') throw InputError(ErrorCode::BadScalar, std::string(whole), "bad monomial '" + std::string(text) + "'");
    if (r == 1 && g == "t") {
      w.push_back(0);
    } else {
      std::string_view digits = g.substr(1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError(ErrorCode::BadScalar, std::string(whole), "bad generator '" + std::string(g) + "'");
      const std::size_t i = std::stoul(std::string(digits));
      if (i >= r) throw InputError(ErrorCode::BadScalar, std::string(whole), "generator '" + std::string(g) + "' out of range");
      w.push_back(static_cast<std::uint32_t>(i));
    }
    pos = dot + 1;
  }
  return w;
}

}  // namespace

TruncSeries TruncSeries::parse(const Field& k, std::size_t r, std::size_t order, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  TruncSeries out(k, r, order);
  if (s.empty()) throw InputError(ErrorCode::BadScalar, std::string(text), "empty series");
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string_view term = std::string_view(s).substr(pos, end - pos);
    if (term.empty()) throw InputError(ErrorCode::BadScalar, std::string(text), "empty term");
    Scalar c = k.one();
    Word w;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      c = k.parse_scalar(term.substr(0, star));
      w = parse_word(r, term.substr(star + 1), text);
    } else if (term[0] == 't') {
      w = parse_word(r, term, text);
    } else {
      c = k.parse_scalar(term);
    }
    out.add_term(w, negative ? -c : c);
    pos = end;
  }
  return out;
}

std::optional<std::size_t> TruncSeries::leading_order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.size();
}

Scalar TruncSeries::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? k_.zero() : it->second;
}

void TruncSeries::add_term(const Word& w, const Scalar& c) {
  if (w.size() > order_ || c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Vec TruncSeries::to_vec(const WordIndex& idx) const {
  if (idx.generators() != r_) throw std::invalid_argument("TruncSeries::to_vec: generator count mismatch");
  Vec v = zero_vec(k_, idx.size());
  for (const auto& [w, c] : terms_)
    if (w.size() <= idx.order()) v[idx.index(w)] = c;
  return v;
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  TruncSeries out(k_, r_, order);
  for (const auto& [w, c] : terms_) out.add_term(w, c);
  return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

TruncSeries& TruncSeries::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(a.k_, a.r_, std::min(a.order_, b.order_));
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      if (u.size() + v.size() > out.order_) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, cu * cv);
    }
  return out;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

std::string TruncSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c.is_negative_for_display();
    const Scalar a = neg ? -c : c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += a.to_string();
    } else {
      if (!a.is_one()) out += a.to_string() + "*";
      out += word_name(r_, w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// IdealSpan

IdealSpan::IdealSpan(const Field& k, std::size_t r, std::size_t order) : idx_(r, order), span_(k, idx_.size()) {}

IdealSpan IdealSpan::generated_by(const Field& k, const WordIndex& idx, const std::vector<Vec>& vectors,
                                  std::vector<TruncSeries> generators) {
  IdealSpan out(k, idx.generators(), idx.order());
  out.gens_ = std::move(generators);
  std::deque<Vec> queue;
  for (const auto& v : vectors)
    if (auto added = out.span_.insert(v)) queue.push_back(std::move(*added));
  while (!queue.empty()) {
    const Vec v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t g = 0; g < idx.generators(); ++g) {
      for (int side = 0; side < 2; ++side) {
        Vec w = zero_vec(k, idx.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (v[i].is_zero()) continue;
          auto j = side == 0 ? idx.left_mul(g, i) : idx.right_mul(i, g);
          if (!j) continue;
          w[*j] = v[i];
          nonzero = true;
        }
        if (!nonzero) continue;
        if (auto added = out.span_.insert(std::move(w))) queue.push_back(std::move(*added));
      }
    }
  }
  return out;
}

IdealSpan IdealSpan::truncated(std::size_t order) const {
  if (order > idx_.order()) throw std::invalid_argument("IdealSpan::truncated: order above the current cap");
  IdealSpan out(field(), idx_.generators(), order);
  for (const auto& row : span_.basis()) out.span_.insert(resize_order(out.idx_, row));
  for (const auto& g : gens_) out.gens_.push_back(g.truncated(order));
  return out;
}

IdealSpan IdealSpan::preimage(std::size_t order) const {
  if (order < idx_.order()) throw std::invalid_argument("IdealSpan::preimage: order below the current cap");
  IdealSpan out(field(), idx_.generators(), order);
  for (const auto& row : span_.basis()) out.span_.insert(resize_order(out.idx_, row));
  for (std::size_t w = idx_.size(); w < out.idx_.size(); ++w) out.span_.insert(unit_vec(field(), out.idx_.size(), w));
  for (const auto& g : gens_) {
    TruncSeries lifted(g.field(), g.generators(), order);
    lifted += g;
    out.gens_.push_back(std::move(lifted));
  }
  return out;
}

std::size_t IdealSpan::dim_mod_power(std::size_t d) const {
  const std::size_t bound = idx_.offset(std::min(d, idx_.order() + 1));
  std::size_t n = 0;
  for (auto p : span_.pivots())
    if (p < bound) ++n;
  return n;
}

IdealSpan ideal_span(const Field& k, std::size_t r, const std::vector<TruncSeries>& gens, std::size_t order) {
  const WordIndex idx(r, order);
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back(g.to_vec(idx));
  return IdealSpan::generated_by(k, idx, vs, gens);
}

IdealSpan power_of_maximal(const Field& k, std::size_t r, std::size_t d, std::size_t order) {
  const WordIndex idx(r, order);
  std::vector<Vec> vs;
  for (std::size_t w = idx.offset(std::min(d, order + 1)); w < idx.size(); ++w) vs.push_back(unit_vec(k, idx.size(), w));
  return IdealSpan::generated_by(k, idx, vs);
}

// ---------------------------------------------------------------------------
// QuotientBasis

QuotientBasis::QuotientBasis(IdealSpan ideal) : ideal_(std::move(ideal)), position_(ideal_.index().size(), -1) {
  for (std::size_t w = 0; w < index().size(); ++w)
    if (!ideal_.span().is_pivot(w)) {
      position_[w] = static_cast<long>(standard_.size());
      standard_.push_back(w);
    }
}

std::optional<std::size_t> QuotientBasis::standard_position(std::size_t word) const {
  if (word >= position_.size() || position_[word] < 0) return std::nullopt;
  return static_cast<std::size_t>(position_[word]);
}

std::vector<std::size_t> QuotientBasis::dims_per_degree() const {
  std::vector<std::size_t> out(order() + 1, 0);
  for (auto w : standard_) ++out[index().degree(w)];
  return out;
}

TruncSeries QuotientBasis::reduce(const TruncSeries& s) const {
  return TruncSeries::from_vec(field(), index(), reduce(s.to_vec(index())));
}

Vec QuotientBasis::coords(std::span<const Scalar> v) const {
  const Vec nf = reduce(Vec(v.begin(), v.end()));
  Vec out;
  out.reserve(standard_.size());
  for (auto w : standard_) out.push_back(nf[w]);
  return out;
}

Vec QuotientBasis::from_coords(std::span<const Scalar> c) const {
  Vec out = zero_vec(field(), index().size());
  for (std::size_t i = 0; i < standard_.size(); ++i) out[standard_[i]] = c[i];
  return out;
}

Vec QuotientBasis::mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
  return coords(series_mul(index(), from_coords(a), from_coords(b)));
}

TruncSeries quotient_mul(const QuotientBasis& q, const TruncSeries& a, const TruncSeries& b) {
  const Vec prod = series_mul(q.index(), a.to_vec(q.index()), b.to_vec(q.index()));
  return TruncSeries::from_vec(q.field(), q.index(), q.reduce(prod));
}

QuotientBasis abelianize(const IdealSpan& ideal) {
  const WordIndex& idx = ideal.index();
  const Field& k = ideal.field();
  std::vector<Vec> vs = ideal.span().basis();
  std::vector<TruncSeries> gens = ideal.generators();
  const std::size_t r = idx.generators();
  if (idx.order() >= 2)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        TruncSeries c(k, r, idx.order());
        c.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, k.one());
        c.add_term({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i)}, -k.one());
        vs.push_back(c.to_vec(idx));
        gens.push_back(std::move(c));
      }
  return QuotientBasis(IdealSpan::generated_by(k, idx, vs, std::move(gens)));
}

const Vec& WordNormalForms::operator()(std::size_t word) {
  auto& slot = cache_.at(word);
  if (!slot) slot = ideal_.reduce(unit_vec(ideal_.field(), idx_.size(), word));
  return *slot;
}

}  // namespace nclift
