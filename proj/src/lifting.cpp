#include "nclift/lifting.hpp"

#include <stdexcept>

#include "nclift/errors.hpp"

namespace nclift {

GradedMap TruncatedLift::coeff(const Word& w) const {
  if (w.size() <= quotient.order())
    if (auto p = quotient.standard_position(quotient.index().index(w))) return coeffs[*p];
  return GradedMap(*complex, -1);
}

TruncatedLift TruncatedLift::truncated(std::size_t order) const {
  TruncatedLift out{complex, QuotientBasis(quotient.ideal().truncated(order)), {}};
  // standard monomials of the truncation are the low-degree prefix
  out.coeffs.assign(coeffs.begin(), coeffs.begin() + static_cast<long>(out.quotient.dim()));
  return out;
}

LiftState first_order_lift(std::shared_ptr<const ChainComplex> c, const std::optional<KMatrix>& basis_change) {
  const Field k = c->algebra().field();
  LiftState s;
  s.ext1 = ext_space(c, 1);
  s.ext2 = ext_space(c, 2);
  const std::size_t r = s.ext1.dim();
  s.basis_change = basis_change.value_or(KMatrix::identity(k, r));
  if (s.basis_change.rows() != r || s.basis_change.cols() != r || rank(s.basis_change) != r)
    throw InputError(ErrorCode::BadArgument, "basis_change", "basis change must be an invertible " + std::to_string(r) +
                                                                 " x " + std::to_string(r) + " matrix");
  s.lift.complex = c;
  s.lift.quotient = QuotientBasis(IdealSpan(k, r, 1));
  s.lift.coeffs.push_back(differential(*c));
  for (std::size_t i = 0; i < r; ++i) s.lift.coeffs.push_back(s.ext1.from_coords(s.basis_change.row(i)));
  s.order = 1;
  return s;
}

std::map<std::size_t, GradedMap> word_products(const TruncatedLift& lift, const WordIndex& target) {
  const ChainComplex& c = *lift.complex;
  const auto& std_words = lift.quotient.standard();
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < std_words.size(); ++i)
    if (!lift.coeffs[i].is_zero()) live.push_back(i);
  std::map<std::size_t, GradedMap> out;
  for (auto a : live)
    for (auto b : live) {
      auto w = target.concat(std_words[a], std_words[b]);
      if (!w) continue;
      GradedMap prod = compose(c, lift.coeffs[a], lift.coeffs[b]);
      if (prod.is_zero()) continue;
      auto it = out.find(*w);
      if (it == out.end()) out.emplace(*w, std::move(prod));
      else it->second += prod;
    }
  return out;
}

namespace {

// Σ_w O_w ⊗ NF(w), by coordinate.
std::map<std::size_t, GradedMap> expand(const std::map<std::size_t, GradedMap>& products, WordNormalForms& nf) {
  std::map<std::size_t, GradedMap> total;
  for (const auto& [w, o] : products) {
    const Vec& v = nf(w);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      auto it = total.find(c);
      if (it == total.end()) it = total.emplace(c, GradedMap(o).scale(v[c])).first;
      else it->second.add_scaled(v[c], o);
    }
  }
  std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
  return total;
}

}  // namespace

std::map<std::size_t, GradedMap> lift_square(const TruncatedLift& lift, const WordIndex& target, const Subspace& ideal) {
  WordNormalForms nf(target, ideal);
  return expand(word_products(lift, target), nf);
}

Obstruction obstruction_at_order(const LiftState& s) {
  const ChainComplex& c = *s.lift.complex;
  Obstruction ob{small_ext_space(s.lift.quotient), {}, {}, {}};
  const SmallExtSpace& sp = ob.space;
  auto total = lift_square(s.lift, sp.ambient(), sp.m_space());

  for (std::size_t a = 0; a < sp.dim(); ++a) {
    auto it = total.find(sp.direction_pivots()[a]);
    ob.sigma.push_back(it == total.end() ? GradedMap(c, -2) : it->second);
  }
  // the square must lie in End ⊗ (J / (mJ + Jm))
  for (std::size_t a = 0; a < sp.dim(); ++a) {
    const Vec& kappa = sp.directions()[a];
    for (std::size_t col = 0; col < kappa.size(); ++col) {
      if (kappa[col].is_zero()) continue;
      auto it = total.find(col);
      if (it == total.end()) it = total.emplace(col, GradedMap(c, -2)).first;
      it->second.add_scaled(-kappa[col], ob.sigma[a]);
    }
  }
  for (const auto& [col, m] : total)
    if (!m.is_zero())
      throw InvariantViolation("order " + std::to_string(s.order + 1) + ": the square of the lift has a component on " +
                               sp.ambient().name(col) + " outside the small-extension kernel");

  ob.coords = KMatrix(c.algebra().field(), s.ext2.dim(), sp.dim());
  for (std::size_t a = 0; a < sp.dim(); ++a) {
    if (!is_chain_map(c, ob.sigma[a]))
      throw InvariantViolation("order " + std::to_string(s.order + 1) + ": obstruction on " +
                               TruncSeries::from_vec(c.algebra().field(), sp.ambient(), sp.directions()[a]).to_string() +
                               " is not a chain map");
    auto red = s.ext2.reduce(ob.sigma[a]);
    for (std::size_t i = 0; i < s.ext2.dim(); ++i) ob.coords(i, a) = red.coords[i];
    ob.witnesses.push_back(std::move(red.witness));
  }
  return ob;
}

LiftState extend_one_order(const LiftState& s) {
  const ChainComplex& c = *s.lift.complex;
  const Field k = c.algebra().field();
  const Obstruction ob = obstruction_at_order(s);
  const SmallExtSpace& sp = ob.space;
  const WordIndex& idx = sp.ambient();
  const std::size_t n1 = s.order + 1;

  // κ_a = Σ_κ c_aκ κ spans the part of J that has to die
  Subspace killed(k, idx.size());
  for (std::size_t a = 0; a < s.ext2.dim(); ++a) {
    Vec v = zero_vec(k, idx.size());
    for (std::size_t b = 0; b < sp.dim(); ++b)
      if (!ob.coords(a, b).is_zero()) axpy(v, ob.coords(a, b), sp.directions()[b]);
    killed.insert(std::move(v));
  }
  if (killed.dim() > s.ext2.dim())
    throw InvariantViolation("order " + std::to_string(n1) + ": " + std::to_string(killed.dim()) +
                             " relations exceed dim Ext^2 = " + std::to_string(s.ext2.dim()));

  LiftState out;
  out.ext1 = s.ext1;
  out.ext2 = s.ext2;
  out.basis_change = s.basis_change;
  out.order = n1;
  out.log = s.log;

  std::vector<TruncSeries> gens;
  for (const auto& row : killed.basis()) {
    TruncSeries series = TruncSeries::from_vec(k, idx, row);
    const std::size_t lead = *series.leading_order();
    if (lead < 2) throw InvariantViolation("relation " + series.to_string() + " has a term of degree < 2");
    out.relations.push_back({series, lead});
    gens.push_back(std::move(series));
  }
  IdealSpan ideal = ideal_span(k, idx.generators(), gens, n1);

  // the ideal generated by the relations is exactly mJ + Jm + span(κ_a)
  Subspace expected = sp.m_space();
  for (const auto& row : killed.basis()) expected.insert(row);
  if (!(expected == ideal.span()))
    throw InvariantViolation("order " + std::to_string(n1) + ": relations do not generate the expected ideal");

  out.lift.complex = s.lift.complex;
  out.lift.quotient = QuotientBasis(std::move(ideal));
  const QuotientBasis& q = out.lift.quotient;
  std::vector<Vec> kappa_nf;
  for (const auto& kappa : sp.directions()) kappa_nf.push_back(q.reduce(kappa));
  for (auto w : q.standard()) {
    if (idx.degree(w) <= s.order) {
      auto pos = s.lift.quotient.standard_position(w);
      if (!pos)
        throw InvariantViolation("order " + std::to_string(n1) + ": " + idx.name(w) +
                                 " became standard; an earlier relation was lost");
      out.lift.coeffs.push_back(s.lift.coeffs[*pos]);
      continue;
    }
    GradedMap g(c, -1);
    for (std::size_t a = 0; a < sp.dim(); ++a)
      if (!kappa_nf[a][w].is_zero()) g.add_scaled(-kappa_nf[a][w], ob.witnesses[a]);
    out.lift.coeffs.push_back(std::move(g));
  }
  // corrections only live in degree N+1
  for (std::size_t a = 0; a < sp.dim(); ++a)
    for (std::size_t w = 0; w < idx.offset(n1); ++w)
      if (!kappa_nf[a][w].is_zero())
        throw InvariantViolation("order " + std::to_string(n1) + ": correction below the top degree");

  if (!lift_square(out.lift, q.index(), q.ideal().span()).empty())
    throw InvariantViolation("order " + std::to_string(n1) + ": the corrected lift does not square to zero");

  out.log.push_back({n1, sp.direction_series(), ob.coords, out.relations.size()});
  return out;
}

LiftState universal_lift(std::shared_ptr<const ChainComplex> c, std::size_t order,
                         const std::optional<KMatrix>& basis_change) {
  if (order < 1) throw InputError(ErrorCode::BadArgument, "order", "order must be at least 1");
  LiftState s = first_order_lift(std::move(c), basis_change);
  while (s.order < order) s = extend_one_order(s);
  return s;
}

LiftState truncate_state(const LiftState& s, std::size_t order) {
  if (order < 1 || order > s.order) throw std::invalid_argument("truncate_state: order out of range");
  LiftState out;
  out.lift = s.lift.truncated(order);
  out.ext1 = s.ext1;
  out.ext2 = s.ext2;
  out.basis_change = s.basis_change;
  out.order = order;
  for (const auto& r : s.relations) {
    TruncSeries t = r.series.truncated(order);
    if (!t.is_zero()) out.relations.push_back({t, *t.leading_order()});
  }
  for (const auto& step : s.log)
    if (step.order <= order) out.log.push_back(step);
  return out;
}

LiftCheck verify_lift(const LiftState& s) {
  LiftCheck out;
  const ChainComplex& c = *s.lift.complex;
  const QuotientBasis& q = s.lift.quotient;
  if (s.lift.coeffs.size() != q.dim()) {
    out.failures.push_back("coefficient count " + std::to_string(s.lift.coeffs.size()) + " != quotient dim " +
                           std::to_string(q.dim()));
    return out;
  }

  out.square_zero = lift_square(s.lift, q.index(), q.ideal().span()).empty();
  if (!out.square_zero) out.failures.push_back("square_zero: Δ^2 != 0 over the quotient");

  out.constant_term = s.lift.coeffs[0] == differential(c);
  if (!out.constant_term) out.failures.push_back("constant_term: coefficient of 1 is not d");

  out.linear_terms = true;
  for (std::size_t i = 0; i < s.parameters(); ++i) {
    const GradedMap g = s.lift.coeff({static_cast<std::uint32_t>(i)});
    const std::string name = generator_name(s.parameters(), i);
    if (!is_chain_map(c, g)) {
      out.linear_terms = false;
      out.failures.push_back("linear_terms: coefficient of " + name + " is not a chain map");
      continue;
    }
    if (s.ext1.reduce(g).coords != s.basis_change.row(i)) {
      out.linear_terms = false;
      out.failures.push_back("linear_terms: coefficient of " + name + " has the wrong Ext^1 class");
    }
  }

  std::vector<TruncSeries> gens;
  for (const auto& r : s.relations) gens.push_back(r.series);
  out.relations_match = ideal_span(q.field(), q.generators(), gens, q.order()).span() == q.ideal().span();
  if (!out.relations_match) out.failures.push_back("relations_match: relations do not generate the quotient ideal");
  return out;
}

}  // namespace nclift
