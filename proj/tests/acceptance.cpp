// Acceptance run: one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mobkit/arith.hpp"
#include "mobkit/dirichlet.hpp"
#include "mobkit/finfield.hpp"
#include "mobkit/inclexcl.hpp"
#include "mobkit/intpoly.hpp"
#include "mobkit/permgroup.hpp"
#include "mobkit/poset.hpp"
#include "support/inclexcl_oracles.hpp"
#include "support/oracles.hpp"
#include "support/random_poset.hpp"

namespace {

using namespace mobkit;
namespace mt = mobkit::testing;

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(const std::string& id, const std::string& title, const std::function<Check()>& body,
            double time_limit_s = 0) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    c.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(time_limit_s) + " s");
  }
  if (!c.ok) ++failures;
  std::printf("%s %-4s %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs,
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
}

IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

std::size_t factorial(unsigned n) {
  std::size_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

poset::IncidenceFunction zeta_of(const poset::PosetPtr& p) { return poset::IncidenceFunction::zeta(p); }

Check check_incidence_algebra(const poset::PosetPtr& p, const std::string& name) {
  Check c;
  const auto mu = poset::mobius_function(p);
  const auto zeta = zeta_of(p);
  const auto delta = poset::IncidenceFunction::delta(p);
  if (!(poset::convolve(mu, zeta) == delta)) c.fail(name + ": mu * zeta != delta");
  if (!(poset::convolve(zeta, mu) == delta)) c.fail(name + ": zeta * mu != delta");
  if (!(poset::invert_unitriangular(zeta) == mu)) c.fail(name + ": zeta^-1 != mu");
  return c;
}

std::vector<std::uint64_t> even_permutation_count_by_inversions(unsigned n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<std::uint64_t> out(2, 0);
  do {
    int inv = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) inv += images[i] > images[j];
    }
    ++out[inv % 2];
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

int main() {
  report("1", "cyclotomic(n) for n = 1..6 equals the displayed table", [] {
    Check c;
    const std::vector<IntPolynomial> table = {
        poly({-1, 1}), poly({1, 1}), poly({1, 1, 1}), poly({1, 0, 1}), poly({1, 1, 1, 1, 1}), poly({1, -1, 1}),
    };
    for (unsigned n = 1; n <= 6; ++n) {
      const auto f = intpoly::cyclotomic(n);
      if (!(f == table[n - 1])) c.fail("Phi_" + std::to_string(n) + " = " + f.to_string());
    }
    return c;
  });

  report("2", "prod_{d|n} Phi_d = x^n - 1 (n <= 200); deg Phi_n = phi(n) (n <= 500)", [] {
    Check c;
    for (unsigned n = 1; n <= 200; ++n) {
      IntPolynomial product = IntPolynomial::constant(1);
      for (auto d : mt::divisors_naive(n)) product = product * intpoly::cyclotomic(BigInt(static_cast<unsigned long>(d)));
      if (!(product == IntPolynomial::x_pow_minus_one(n))) c.fail("product identity fails at n = " + std::to_string(n));
      if (!intpoly::verify_product_identity(n)) c.fail("verify_product_identity false at n = " + std::to_string(n));
    }
    for (unsigned n = 1; n <= 500; ++n) {
      if (intpoly::cyclotomic(n).degree() != mt::phi_naive(n)) c.fail("degree mismatch at n = " + std::to_string(n));
    }
    return c;
  }, 10);

  report("3", "count_irreducible(q, n) = |enumerate_irreducible| on the listed (q, n); I_2(2) = 1", [] {
    Check c;
    const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>> grid = {{2, 1, 8}, {3, 1, 5}, {2, 2, 4}, {5, 1, 3}};
    for (const auto& [p, m, max_n] : grid) {
      const auto field = finfield::make_field(p, m);
      for (unsigned n = 1; n <= max_n; ++n) {
        const auto listed = finfield::enumerate_irreducible(field, n);
        const BigInt count = finfield::count_irreducible(BigInt(static_cast<unsigned long>(field->q())), n);
        if (count != BigInt(static_cast<unsigned long>(listed.size()))) {
          c.fail("q = " + std::to_string(field->q()) + ", n = " + std::to_string(n));
        }
        for (const auto& f : listed) {
          if (!f.is_monic() || f.degree() != n) c.fail("enumerated a non-monic or wrong-degree polynomial");
        }
      }
    }
    const auto f2 = finfield::prime_field(2);
    const auto deg2 = finfield::enumerate_irreducible(f2, 2);
    if (deg2.size() != 1 || deg2[0].to_string() != "x^2 + x + 1") c.fail("degree 2 over F_2 is not {x^2 + x + 1}");
    return c;
  }, 30);

  report("4", "x^{q^n} - x is the product of irreducibles of degree d | n on the listed (q, n)", [] {
    Check c;
    const std::vector<std::pair<std::uint64_t, unsigned>> grid = {{2, 4}, {3, 2}, {5, 2}};
    for (const auto& [q, max_n] : grid) {
      const auto field = finfield::prime_field(q);
      for (unsigned n = 1; n <= max_n; ++n) {
        if (!finfield::verify_xqn_factorization(field, n)) {
          c.fail("q = " + std::to_string(q) + ", n = " + std::to_string(n));
        }
      }
    }
    return c;
  }, 30);

  report("5", "q^n = sum_{d|n} d I_q(d) for q in {2,3,4,5,7,8,9}, n <= 12", [] {
    Check c;
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
      for (unsigned n = 1; n <= 12; ++n) {
        BigInt sum = 0;
        for (auto d : mt::divisors_naive(n)) {
          sum += BigInt(static_cast<unsigned long>(d)) * finfield::count_irreducible(BigInt(q), BigInt(static_cast<unsigned long>(d)));
        }
        BigInt qn;
        mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
        if (sum != qn) c.fail("q = " + std::to_string(q) + ", n = " + std::to_string(n));
      }
    }
    return c;
  });

  report("6", "mu * zeta = zeta * mu = delta and zeta^-1 = mu on divisor, subset and random posets", [] {
    Check c;
    const auto merge = [&](const Check& sub) {
      if (!sub.ok) c.fail(sub.detail);
    };
    for (unsigned n = 1; n <= 200; ++n) merge(check_incidence_algebra(poset::build_divisor_poset(n), "divisors of " + std::to_string(n)));
    for (unsigned base = 0; base <= 5; ++base) {
      merge(check_incidence_algebra(poset::build_subset_poset(base, poset::SubsetOrder::kInclusion), "inclusion " + std::to_string(base)));
      merge(check_incidence_algebra(poset::build_subset_poset(base, poset::SubsetOrder::kExclusion), "exclusion " + std::to_string(base)));
    }
    std::mt19937_64 rng(0xacce);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t size = 1 + rng() % 32;
      merge(check_incidence_algebra(mt::random_poset(rng, size, 0.15), "random poset " + std::to_string(trial)));
    }
    return c;
  });

  report("7", "divisor-poset mu(a, b) = mu(b / a) (n <= 200); exclusion mu(U, T) = (-1)^{|U \\ T|} (base <= 5)", [] {
    Check c;
    for (unsigned n = 1; n <= 200; ++n) {
      const auto p = poset::build_divisor_poset(n);
      const auto mu = poset::mobius_function(p);
      for (std::size_t a = 0; a < p->size(); ++a) {
        for (std::size_t b = 0; b < p->size(); ++b) {
          if (!p->leq(a, b)) continue;
          const auto av = std::stoull(p->label(a));
          const auto bv = std::stoull(p->label(b));
          if (mu.at(a, b) != mt::mobius_naive(bv / av)) c.fail("n = " + std::to_string(n));
        }
      }
    }
    for (unsigned base = 0; base <= 5; ++base) {
      const auto p = poset::build_subset_poset(base, poset::SubsetOrder::kExclusion);
      const auto mu = poset::mobius_function(p);
      for (std::uint64_t u = 0; u < p->size(); ++u) {
        for (std::uint64_t t = 0; t < p->size(); ++t) {
          const bool contains = (u & t) == t;
          const int expected = contains ? (std::popcount(u & ~t) % 2 == 0 ? 1 : -1) : 0;
          if (mu.at(u, t) != expected) c.fail("base " + std::to_string(base));
        }
      }
    }
    return c;
  });

  report("8", "derangements: enumeration (n <= 9), exclusion-poset f(empty) (n <= 8), |D(n) - n!/e| < 1/2 (n <= 50)", [] {
    Check c;
    for (unsigned n = 0; n <= 9; ++n) {
      if (inclexcl::count_derangements(n) != BigInt(static_cast<unsigned long>(mt::derangements_brute(n)))) {
        c.fail("enumeration mismatch at n = " + std::to_string(n));
      }
    }
    for (unsigned n = 0; n <= 8; ++n) {
      if (inclexcl::fixed_point_table(n).front().f != inclexcl::count_derangements(n)) {
        c.fail("poset inversion mismatch at n = " + std::to_string(n));
      }
    }
    for (unsigned n = 1; n <= 50; ++n) {
      if (!mt::closest_to_factorial_over_e(n, inclexcl::count_derangements(n))) {
        c.fail("not the closest integer to n!/e at n = " + std::to_string(n));
      }
    }
    return c;
  });

  report("9", "inclusion-exclusion matches direct unions on 500 families and 500 spaces; identity (*) holds", [] {
    Check c;
    std::mt19937_64 rng(0x1e);
    for (int trial = 0; trial < 500; ++trial) {
      const auto fam = mt::random_family(rng, 8, 16);
      std::uint64_t direct = 0;
      for (std::size_t x = 0; x < fam.universe().size(); ++x) {
        bool in_any = false;
        for (const auto& s : fam.sets()) in_any = in_any || s[x];
        direct += in_any;
      }
      if (inclexcl::union_size_ie(fam) != direct) c.fail("union size, family " + std::to_string(trial));
      if (!inclexcl::verify_indicator_identity(fam)) c.fail("indicator identity, family " + std::to_string(trial));
    }
    for (int trial = 0; trial < 500; ++trial) {
      const auto space = mt::random_space(rng, 8, 12);
      Rational direct = 0;
      for (std::size_t x = 0; x < space.outcomes().size(); ++x) {
        bool in_any = false;
        for (const auto& e : space.events()) in_any = in_any || e[x];
        if (in_any) direct += space.weights()[x];
      }
      if (inclexcl::prob_union_ie(space) != direct) c.fail("probability, space " + std::to_string(trial));
    }
    return c;
  });

  report("10", "zeta bounds on a 10 x 10 grid (Re z in [1.1, 10], Im z in [-10, 10], N = 10^6); Z_N R_N ~ 1", [] {
    Check c;
    int passes = 0;
    int inconclusive = 0;
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const dirichlet::Complex z(1.1 + 8.9 * i / 9.0, -10.0 + 20.0 * j / 9.0);
        const auto r = dirichlet::verify_zeta_bounds(z, 1'000'000);
        const std::string where = "z = " + std::to_string(z.real()) + " + " + std::to_string(z.imag()) + "i";
        if (r.verdict == dirichlet::Verdict::kPass) {
          ++passes;
        } else if (r.verdict == dirichlet::Verdict::kInconclusive && r.bound_gap < 10 * r.zeta.tail_bound()) {
          ++inconclusive;
        } else {
          c.fail(dirichlet::to_string(r.verdict) + " at " + where);
        }
        if (r.reciprocal_verdict == dirichlet::Verdict::kViolation) c.fail("|1/zeta| > zeta(Re z) at " + where);
      }
    }
    for (const dirichlet::Complex z : {dirichlet::Complex(2, 0), dirichlet::Complex(3, 0), dirichlet::Complex(2, 5)}) {
      const auto check = dirichlet::check_reciprocal_product(z, 1'000'000);
      if (!check.within) c.fail("product off by " + std::to_string(check.deviation) + " at Re z = " + std::to_string(z.real()));
    }
    if (c.ok) c.detail = std::to_string(passes) + " pass, " + std::to_string(inconclusive) + " inconclusive";
    return c;
  }, 300);

  report("11a", "|<3-cycles>| = n!/2 for n = 3..7", [] {
    Check c;
    for (unsigned n = 3; n <= 7; ++n) {
      const auto g = permgroup::generate_group(permgroup::three_cycles(n));
      if (g.size() != factorial(n) / 2) c.fail("n = " + std::to_string(n) + ": order " + std::to_string(g.size()));
    }
    return c;
  });

  report("11b", "normal closure of (1 2 3) in A_n is A_n for n = 5, 6, 7", [] {
    Check c;
    for (unsigned n = 5; n <= 7; ++n) {
      const auto an = permgroup::generate_group(permgroup::three_cycles(n));
      const auto closure = permgroup::normal_closure(
          permgroup::PermSet(n, {permgroup::Permutation::parse_cycles(n, "(1 2 3)")}), an);
      const auto counts = even_permutation_count_by_inversions(n);
      bool all_even = true;
      for (const auto& p : closure) all_even = all_even && p.is_even();
      if (!closure.same_elements(an) || closure.size() != counts[0] || !all_even) {
        c.fail("n = " + std::to_string(n) + ": order " + std::to_string(closure.size()));
      }
    }
    return c;
  });

  report("11c", "(abc) = (bc)(ac) and (ab)(cd) = (acd)(acb) for all distinct points, n = 4..7", [] {
    Check c;
    for (unsigned n = 4; n <= 7; ++n) {
      const auto r = permgroup::verify_threecycle_identities(n);
      for (const auto* id : {&r.three_cycle, &r.double_transposition}) {
        if (id->holds) continue;
        std::string tuple;
        for (unsigned x : *id->counterexample) tuple += (tuple.empty() ? "" : " ") + std::to_string(x);
        c.fail("n = " + std::to_string(n) + ": " + id->identity + " fails at (" + tuple + "), right side " +
               id->counterexample_value);
      }
    }
    return c;
  });

  report("11d", "derived series: S_3, S_4 solvable; S_5 not", [] {
    Check c;
    if (!permgroup::derived_series_solvable(permgroup::symmetric_group(3))) c.fail("S_3");
    if (!permgroup::derived_series_solvable(permgroup::symmetric_group(4))) c.fail("S_4");
    if (permgroup::derived_series_solvable(permgroup::symmetric_group(5))) c.fail("S_5");
    return c;
  });

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
