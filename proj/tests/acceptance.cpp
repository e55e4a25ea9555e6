// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nclift/commands.hpp"
#include "nclift/errors.hpp"
#include "nclift/modcomp.hpp"
#include "nclift/samples.hpp"
#include "nclift/smallext.hpp"

using namespace nclift;

namespace {

const std::vector<std::string> kFixtures{"jordan_n2.json", "jordan_n3.json", "obstructed_k.json",
                                         "obstructed_k_gf5.json", "k_double.json"};

std::size_t verified_orders = 0;
std::size_t lift_runs = 0;

Problem load(const std::string& name, std::optional<Field> f = std::nullopt) {
  return parse_problem_file(std::string(NCLIFT_FIXTURE_DIR) + "/" + name, f);
}

std::size_t fixture_order(const Problem& p) { return p.options.order.value_or(4); }

// Lift order by order; d^2 = 0 and verify_lift are asserted at every step.
LiftState lift(std::shared_ptr<const ChainComplex> c, std::size_t order,
               const std::function<void(const LiftState&)>& each = {},
               const std::optional<KMatrix>& basis_change = std::nullopt) {
  ++lift_runs;
  if (!is_dg(*c)) throw InvariantViolation("input complex is not a complex");
  LiftState s = first_order_lift(c, basis_change);
  while (true) {
    const LiftCheck chk = verify_lift(s);
    if (!chk.ok()) throw InvariantViolation("verify_lift failed at order " + std::to_string(s.order));
    ++verified_orders;
    if (each) each(s);
    if (s.order >= order) return s;
    s = extend_one_order(s);
  }
}

std::vector<std::size_t> ladder(const LiftState& s) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d <= s.order + 1; ++d) out.push_back(s.quotient().ideal().dim_mod_power(d));
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// x^n + t_{n-1}*x^{n-1} + ... + t0, written out independently of the library
std::string sylvester_text(std::size_t n) {
  std::string s = "x^" + std::to_string(n);
  for (std::size_t i = n; i-- > 0;) {
    s += " + t" + std::to_string(i);
    if (i == 1) s += "*x";
    else if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s;
}

KMatrix random_invertible(const Field& k, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    KMatrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = k.from_int(static_cast<long>(rng() % 11) - 5);
    if (rank(m) == n) return m;
  }
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const InvariantViolation& e) {
    o = {false, std::string("invariant violation: ") + e.what()};
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::printf("%s  %d. %s: %s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "Jordan/Sylvester reproduction", [] {
    Outcome o;
    for (std::size_t n : {2u, 3u}) {
      const Problem p = load("jordan_n" + std::to_string(n) + ".json");
      const LiftState s = lift(p.complex, 4);
      std::vector<std::size_t> free_dims{1}, comm_dims;
      for (std::size_t d = 1; d <= 4; ++d) free_dims.push_back(free_dims.back() * n);
      for (std::size_t d = 0; d <= 4; ++d) comm_dims.push_back(binomial(n + d - 1, d));
      const std::string text = h0_family(s, *p.options.presentation).entry_text(0, 0);
      const bool ok = s.ext1.dim() == n && s.ext2.dim() == 0 && s.relations.empty() &&
                      s.quotient().dims_per_degree() == free_dims &&
                      abelianize(s.quotient().ideal()).dims_per_degree() == comm_dims && text == sylvester_text(n);
      o.ok = o.ok && ok;
      o.detail += "n=" + std::to_string(n) + " \"" + text + "\"" + (ok ? "" : " MISMATCH") + "; ";
    }
    return o;
  });

  criterion(2, "obstructed fixture K", [] {
    const LiftState s = lift(load("obstructed_k.json").complex, 4);
    const bool one = s.relations.size() == 1;
    const std::string lead = one ? s.relations[0].series.truncated(s.relations[0].leading_order).to_string() : "";
    const SquareIsoReport sq = square_iso_report(s);
    const bool ok = s.ext1.dim() == 1 && s.ext2.dim() == 1 && one && lead == "t.t" && sq.ok() &&
                    sq.ext1_squared_dim == 1 && verify_lift(s).ok();
    return Outcome{ok, "Ext1=" + std::to_string(s.ext1.dim()) + " Ext2=" + std::to_string(s.ext2.dim()) +
                           " relations=" + std::to_string(s.relations.size()) + " leading form " + lead +
                           " square iso " + std::to_string(sq.ext1_squared_dim) + "=" +
                           std::to_string(sq.relations_mod_cube)};
  });

  criterion(3, "relation count bounded by dim Ext^2", [] {
    Outcome o;
    std::size_t checked = 0, runs = 0;
    auto bound = [&](const LiftState& s) {
      ++checked;
      if (s.relations.size() > s.ext2.dim()) o.ok = false;
    };
    for (const auto& f : kFixtures) {
      lift(load(f).complex, 4, bound);
      ++runs;
    }
    const Field k = Field::prime(5);
    std::mt19937_64 rng(2024);
    std::size_t drawn = 0, random_runs = 0;
    while (random_runs < 20) {
      ++drawn;
      auto c = samples::random_three_term(k, 2 + rng() % 2, 3, rng);
      if (ext_space(c, 1).dim() > 6) continue;
      lift(c, 4, bound);
      ++random_runs;
    }
    o.detail = std::to_string(runs) + " fixtures + " + std::to_string(random_runs) + " random GF(5) complexes (" +
               std::to_string(drawn) + " drawn), " + std::to_string(checked) + " orders checked";
    return o;
  });

  criterion(4, "alpha injective on non-artifact directions", [] {
    Outcome o;
    for (const auto& f : kFixtures) {
      const Problem p = load(f);
      const LiftState s = lift(p.complex, fixture_order(p));
      const SmallExtSpace sp = small_ext_space(s.quotient());
      const auto na = sp.non_artifact_functionals();
      const std::size_t r = rank_on(alpha_matrix(s, sp), na);
      o.ok = o.ok && r == na.size();
      o.detail += p.name + " " + std::to_string(r) + "/" + std::to_string(na.size()) + "; ";
    }
    return o;
  });

  criterion(5, "Ext^2(k,k) = second syzygy = small extensions", [] {
    Outcome o;
    const Field q = Field::rationals();
    std::vector<QuotientBasis> corpus;
    for (std::size_t r : {1u, 2u, 3u}) corpus.emplace_back(IdealSpan(q, r, 1));
    corpus.emplace_back(ideal_span(q, 1, {TruncSeries::parse(q, 1, 3, "t.t")}, 3));
    const LiftState k = lift(load("obstructed_k.json").complex, 4);
    for (std::size_t n = 1; n <= 4; ++n) corpus.push_back(truncate_state(k, n).quotient());
    const LiftState j = lift(load("jordan_n2.json").complex, 3);
    for (std::size_t n = 1; n <= 3; ++n) corpus.push_back(truncate_state(j, n).quotient());
    const LiftState kk = lift(load("k_double.json").complex, 2);
    corpus.push_back(kk.quotient());
    corpus.emplace_back(ideal_span(q, 2, {TruncSeries::parse(q, 2, 3, "t0.t1 - t1.t0")}, 3));
    corpus.emplace_back(ideal_span(q, 2, {TruncSeries::parse(q, 2, 3, "t0.t0 + t1.t1.t1"), TruncSeries::parse(q, 2, 3, "t0.t1")}, 3));
    std::size_t agree = 0;
    for (const auto& a : corpus) {
      const std::size_t e = ext_k_k(algebra_from_quotient(a), 2), s = second_syzygy_dim(a), t = small_ext_space(a).dim();
      if (e == s && s == t) ++agree;
      else o.ok = false;
    }
    o.detail = std::to_string(agree) + "/" + std::to_string(corpus.size()) + " quotients agree";
    o.ok = o.ok && corpus.size() >= 10;
    return o;
  });

  criterion(6, "image of alpha over T/m^2 is Ext^1 squared", [] {
    Outcome o;
    for (const auto& f : kFixtures) {
      const Problem p = load(f);
      const LiftState s = lift(p.complex, 1);
      const KMatrix am = alpha_matrix(s, small_ext_space(s.quotient()));
      Subspace image(p.field, s.ext2.dim());
      for (std::size_t c = 0; c < am.cols(); ++c) image.insert(am.col(c));
      const Subspace sq = ext1_squared(s.ext1, s.ext2);
      o.ok = o.ok && image == sq;
      o.detail += p.name + " dim " + std::to_string(image.dim()) + "; ";
    }
    return o;
  });

  criterion(7, "basis independence of the universal lift", [] {
    Outcome o;
    std::mt19937_64 rng(99);
    std::size_t reruns = 0;
    for (const auto& f : kFixtures) {
      const Problem p = load(f);
      const std::size_t order = fixture_order(p);
      const LiftState base = lift(p.complex, order);
      for (int t = 0; t < 5; ++t) {
        const LiftState other = lift(p.complex, order, {}, random_invertible(p.field, base.parameters(), rng));
        ++reruns;
        o.ok = o.ok && other.quotient().dims_per_degree() == base.quotient().dims_per_degree() &&
               ladder(other) == ladder(base);
      }
    }
    o.detail = std::to_string(reruns) + " reruns with random Ext^1 bases";
    return o;
  });

  criterion(8, "d^2 = 0 and lift verification at every order", [] {
    // every lift above was checked order by order
    for (const auto& f : kFixtures) lift(load(f).complex, 4);
    return Outcome{true, std::to_string(lift_runs) + " lift runs, " + std::to_string(verified_orders) +
                             " verified orders, no violations"};
  });

  criterion(9, "Q and GF(10007) give identical dimension data", [] {
    Outcome o;
    RunOptions opt;
    for (const auto& f : kFixtures) {
      const Problem pq = load(f, Field::rationals()), pp = load(f, Field::prime(10007));
      opt.order = fixture_order(pq);
      bool same = true;
      for (const char* cmd : {"ext", "lift", "abelianize", "smallext"}) {
        const Report a = run_command(cmd, pq, opt), b = run_command(cmd, pp, opt);
        for (const char* key : {"ext", "parameters", "ext2", "quotient_dims", "relation_ladder", "abelian_dims", "dim",
                                "artifact", "non_artifact", "alpha_rank"})
          if (a.json.contains(key) && a.json[key] != b.json[key]) same = false;
      }
      o.ok = o.ok && same;
      o.detail += pq.name + (same ? " same; " : " DIFFERENT; ");
    }
    return o;
  });

  std::printf("%s: %d failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
