#include <chrono>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nonint/criteria.hpp"
#include "nonint/unfoldings.hpp"

using namespace nonint;
using namespace testutil;

namespace {

const UPoly ONE(1L);

ReducedSystem fold_hopf(QuadExt mu, QuadExt nu, QuadExt alpha, int s = 1) {
  FoldHopfParams p;
  p.mu = mu;
  p.nu = nu;
  p.alpha = alpha;
  p.s = s;
  p.field = kQ2;
  return fold_hopf_system(p);
}

ReducedSystem double_hopf1(QuadExt mu, QuadExt nu, QuadExt alpha, QuadExt beta, int s = 1) {
  DoubleHopfParams p;
  p.mu = mu;
  p.nu = nu;
  p.alpha = alpha;
  p.beta = beta;
  p.s = s;
  p.field = kQ2;
  return double_hopf_system(p, 1);
}

VariationalData kappas(const ReducedSystem& rs, int K) { return kappa_coefficients(rs.system, rs.curve, K); }

struct Order {
  RatFunc k1, kk;
  RootPartition part;
  SimplicityProfile prof;
};

Order order_data(const ReducedSystem& rs, int k) {
  const auto vd = kappas(rs, k);
  Order o{vd.kappa(1), vd.kappa(k), {}, {}};
  o.part = partition_roots(o.k1, o.kk, kQ2);
  o.prof = simplicity_profile(o.k1, o.part, k);
  return o;
}

const SharedClass* find_shared(const RootPartition& p, const UPoly& f) {
  for (const auto& c : p.shared) {
    if (c.factor == f) return &c;
  }
  return nullptr;
}

std::size_t shared_index(const RootPartition& p, const UPoly& f) {
  for (std::size_t i = 0; i < p.shared.size(); ++i) {
    if (p.shared[i].factor == f) return i;
  }
  return p.shared.size();
}

// theta_k / Omega^(k-1) = ratio is consistent iff ratio' + (k-1) kappa_1 ratio = kappa_k.
bool witness_solves_theta_equation(const H2FailureWitness& w, const RatFunc& k1, const RatFunc& kk) {
  return w.theta_ratio.derivative() + RatFunc(QuadExt(static_cast<long>(w.k - 1))) * k1 * w.theta_ratio == kk;
}

}  // namespace

TEST_CASE("check_H1 examples") {
  SUBCASE("rational residues fail") {
    const auto fh = fold_hopf(q(-1), q(2), q(3));
    const auto om = omega_decompose(kappas(fh, 1).kappa(1), kQ2);
    const auto v = check_H1(om);
    CHECK_FALSE(v.holds);
    CHECK(v.reason == H1Reason::all_residues_rational);
    REQUIRE(v.rational_residues.size() == 2);
    for (const auto& r : v.rational_residues) {
      if (r.cls.factor == X - ONE) CHECK(r.residue == UPoly(q(5, 2)));
      if (r.cls.factor == X + ONE) CHECK(r.residue == UPoly(q(1, 2)));
    }
  }
  SUBCASE("irrational residues hold") {
    const auto om = omega_decompose(RatFunc(X * rt2() + ONE, X * X - ONE), kQ2);
    const auto v = check_H1(om);
    CHECK(v.holds);
    CHECK(v.reason == H1Reason::irrational_residue);
  }
  SUBCASE("exponential part holds") {
    const auto om = omega_decompose(RatFunc(X * rt2() + ONE, X * X), kQ2);
    const auto v = check_H1(om);
    CHECK(v.holds);
    CHECK(v.reason == H1Reason::nonzero_exp_part);
    CHECK(v.exp_part == RatFunc(UPoly(-1L), X));
  }
  SUBCASE("conjugate residues of an irreducible class are irrational") {
    const auto v = check_H1(omega_decompose(RatFunc(ONE, X * X - UPoly(2L))));
    CHECK(v.holds);
    CHECK(v.reason == H1Reason::irrational_residue);
  }
}

TEST_CASE("partition_roots examples") {
  SUBCASE("fold-Hopf, two shared classes") {
    const auto o = order_data(fold_hopf(q(-1), q(1), rt2()), 3);
    CHECK(o.part.shared.size() == 2);
    CHECK(o.part.fresh.empty());
    for (const auto& c : o.part.shared) {
      CHECK(c.b1 == 1);
      CHECK(c.a1 == 1);
    }
    CHECK(o.part.n1 == 2);
    CHECK(o.part.nk == 0);
    CHECK(o.part.rad1 == X * X - ONE);
    CHECK(o.part.radk == ONE);
  }
  SUBCASE("fold-Hopf alpha = nu, one shared and one new class") {
    const auto o = order_data(fold_hopf(q(-1), rt2(), rt2()), 3);
    CHECK(o.k1 == RatFunc(UPoly(rt2()), X - ONE));
    REQUIRE(o.part.shared.size() == 1);
    CHECK(o.part.shared[0].factor == X - ONE);
    CHECK(o.part.shared[0].b1 == 1);
    CHECK(o.part.shared[0].a1 == 1);
    REQUIRE(o.part.fresh.size() == 1);
    CHECK(o.part.fresh[0].factor == X + ONE);
    CHECK(o.part.fresh[0].ak == 1);
  }
  SUBCASE("equal denominators give empty partition") {
    const auto o = order_data(double_hopf1(q(1), rt2(), q(1, 2), q(0)), 3);
    CHECK(o.part.shared.empty());
    CHECK(o.part.fresh.empty());
    CHECK(o.part.rad1 == ONE);
    CHECK(o.part.radk == ONE);
  }
  SUBCASE("negative exponents") {
    const RatFunc k1(ONE, pow(X, 3) * (X - ONE));
    const RatFunc kk(ONE, X * (X + ONE));
    const auto part = partition_roots(k1, kk);
    CHECK(find_shared(part, X)->a1 == -2);
    CHECK(find_shared(part, X - ONE)->a1 == -1);
    CHECK(part.fresh.size() == 1);
    CHECK(partition_denominator(k1, part) == RatFunc(kk.den()));
  }
  CHECK_THROWS(partition_roots(RatFunc(ONE, X), RatFunc()));
}

TEST_CASE("partition reconstructs kappa_kd on the unfoldings") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto rs = t % 2 == 0 ? fold_hopf(random_q2(rng, false), random_q2(rng, false), random_q2(rng))
                               : double_hopf1(random_q2(rng, false), random_q2(rng, false), random_q2(rng),
                                              random_q2(rng), 1);
    const auto vd = kappas(rs, 7);
    for (int k = 2; k <= 7; ++k) {
      if (vd.kappa(k).is_zero()) continue;
      const auto part = partition_roots(vd.kappa(1), vd.kappa(k), kQ2);
      CHECK(partition_denominator(vd.kappa(1), part) == RatFunc(vd.kappa(k).den()));
      for (const auto& c : part.shared) {
        CHECK(c.a1 != 0);
        CHECK(c.a1 >= -c.b1);
      }
      for (const auto& c : part.fresh) {
        CHECK(c.ak >= 1);
        CHECK_FALSE(divides(c.factor, vd.kappa(1).den()));
      }
    }
  }
}

TEST_CASE("simplicity_profile examples") {
  SUBCASE("bad b irrational: simple for all b") {
    const auto o = order_data(fold_hopf(q(-1), q(1), rt2()), 3);
    const auto& cs = o.prof.classes[shared_index(o.part, X + ONE)];
    REQUIRE(cs.bad_b.has_value());
    CHECK(*cs.bad_b == rt2() - q(1));
    CHECK(cs.simple_for_all_b);
    CHECK(cs.simple_at_b1);
  }
  SUBCASE("alpha = nu + 1: double zero at b = 1 only") {
    const auto o = order_data(fold_hopf(q(-1), rt2() - q(1), rt2()), 3);
    const auto& cs = o.prof.classes[shared_index(o.part, X + ONE)];
    REQUIRE(cs.bad_b.has_value());
    CHECK(cs.bad_b->is_one());
    CHECK_FALSE(cs.simple_at_b1);
    CHECK_FALSE(cs.simple_for_all_b);
    CHECK(cs.simple_whenever_bj_gt_1);
  }
  SUBCASE("multiple root of kappa_1d: never bad") {
    const RatFunc k1(ONE, X * X);
    const RatFunc kk(ONE, pow(X, 3));
    const auto part = partition_roots(k1, kk);
    const auto prof = simplicity_profile(k1, part, 2);
    REQUIRE(prof.classes.size() == 1);
    CHECK_FALSE(prof.classes[0].bad_b.has_value());
    CHECK(prof.classes[0].simple_for_all_b);
  }
}

TEST_CASE("simplicity_profile agrees with the symbolic kbar double-root test") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    ReducedSystem rs;
    switch (t % 3) {
      case 0: {
        // alpha - nu chosen so that the bad b lands in 1..5 at some orders.
        const QuadExt nu = random_q2(rng, false);
        rs = fold_hopf(q(-1), nu, nu + q(static_cast<long>(rng() % 4)), 1);
        break;
      }
      case 1:
        rs = fold_hopf(random_q2(rng, false), random_q2(rng, false), random_q2(rng), -1);
        break;
      default:
        rs = double_hopf1(q(1), q(static_cast<long>(rng() % 5)) - q(2), random_q2(rng), random_q2(rng, false), 1);
    }
    const auto vd = kappas(rs, 7);
    for (int k = 3; k <= 7; k += 2) {
      if (vd.kappa(k).is_zero()) continue;
      const auto part = partition_roots(vd.kappa(1), vd.kappa(k), kQ2);
      const auto prof = simplicity_profile(vd.kappa(1), part, k);
      for (std::size_t c = 0; c < part.shared.size(); ++c) {
        for (int bj = 1; bj <= 5; ++bj) {
          std::vector<int> b(part.shared.size(), 1);
          b[c] = bj;
          const UPoly kb = kappa_bar(vd.kappa(1), part, k, b);
          const UPoly& p = part.shared[c].factor;
          CHECK(divides(p, kb));
          const bool multiple = kb.is_zero() || divides(p, kb.derivative());
          const bool predicted = prof.classes[c].bad_b.has_value() && *prof.classes[c].bad_b == q(bj);
          CHECK(multiple == predicted);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("build_rho examples") {
  {
    const auto o = order_data(fold_hopf(q(-1), q(1), rt2()), 3);
    CHECK(build_rho(o.k1, o.part, 3) == (X * (rt2() - q(1)) + ONE) * q(2));
  }
  {
    const QuadExt alpha = q(1, 3) + rt2(), nu = q(-2);
    const auto o = order_data(double_hopf1(q(1), nu, alpha, q(2)), 3);
    CHECK(build_rho(o.k1, o.part, 3) == (X * X * (alpha + q(1)) + UPoly(nu)) * q(-2));
  }
  {
    const QuadExt alpha = q(1, 2), nu = rt2();
    const auto o = order_data(double_hopf1(q(1), nu, alpha, q(0)), 3);
    CHECK(o.part.n1 == 0);
    CHECK(o.part.nk == 0);
    CHECK(build_rho(o.k1, o.part, 3) == (X * X * alpha + UPoly(nu)) * q(-2));
  }
}

TEST_CASE("divide_by_rho examples") {
  {
    const auto o = order_data(fold_hopf(q(-1), q(1), rt2()), 3);
    CHECK(o.kk.num() == (X * rt2() + ONE) * q(-6));
    const auto d = divide_by_rho(o.kk.num(), build_rho(o.k1, o.part, 3));
    CHECK(d.rho_bar == UPoly(-(q(6) + q(3) * rt2())));
    CHECK(d.rho_tilde == UPoly(q(6) + q(6) * rt2()));
    CHECK(d.n_bar == 0);
  }
  for (int s : {1, -1}) {
    const auto o = order_data(double_hopf1(q(0), rt2(), q(1, 2), q(0), s), 3);
    const UPoly rho = build_rho(o.k1, o.part, 3);
    CHECK(rho.degree() == Degree(2));
    CHECK(o.kk.num() == UPoly(q(-6 * s)));
    const auto d = divide_by_rho(o.kk.num(), rho);
    CHECK(d.rho_bar.is_zero());
    CHECK(d.rho_tilde == UPoly(q(-6 * s)));
    CHECK(d.n_bar == 0);
  }
  {
    const UPoly rho = X * X + X * rt2() - q(3);
    const auto d = divide_by_rho(rho, rho);
    CHECK(d.rho_bar == ONE);
    CHECK(d.rho_tilde.is_zero());
    CHECK(d.n_bar == 0);
  }
  {
    const UPoly rho = X + ONE;
    const auto d = divide_by_rho(pow(X, 2) * pow(X - ONE, 2) * rho + ONE, rho);
    CHECK(d.n_bar == 2);
  }
  CHECK_THROWS(divide_by_rho(X, UPoly()));
}

TEST_CASE("polynomial_solution examples") {
  {
    const auto z = polynomial_solution(X, ONE, X * q(2));
    REQUIRE(z.has_value());
    CHECK(*z == X);
  }
  {
    const UPoly A = X * (X * X - ONE);
    const UPoly rho = X * X * q(-3) - UPoly(q(2) * rt2());
    const UPoly rhs = X * X * q(-9) - UPoly(q(6) * (rt2() - q(1)));
    CHECK(solution_degree_bound(A, rho, rhs) == 3);
    CHECK_FALSE(polynomial_solution(A, rho, rhs).has_value());
  }
  {
    const UPoly A = pow(X, 3);
    const UPoly rho = X * X * q(-3) - UPoly(q(2) * rt2());
    const UPoly rhs = -pow(X, 4) - X * X * (q(3) + q(2) * rt2()) - UPoly(q(2) * rt2());
    const auto z = polynomial_solution(A, rho, rhs);
    REQUIRE(z.has_value());
    CHECK(*z == X * X + ONE);
  }
  {
    // Homogeneous solutions are reported: x z' - 2 z = 0 has z = x^2.
    const auto sol = solve_polynomial_ode(X, UPoly(-2L), UPoly(), solution_degree_bound(X, UPoly(-2L), UPoly()));
    CHECK(sol.exists);
    CHECK(sol.homogeneous.monic() == X * X);
  }
}

TEST_CASE("polynomial_solution substitution identity and inconsistency margin") {
  std::mt19937_64 rng(99);
  int found = 0, absent = 0;
  for (int t = 0; t < 80; ++t) {
    const UPoly A = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    const UPoly rho = random_poly(rng, static_cast<int>(rng() % 3));
    UPoly rhs;
    if (t % 2 == 0) {
      const UPoly z = random_poly(rng, static_cast<int>(rng() % 4));
      rhs = A * z.derivative() + rho * z;
    } else {
      rhs = random_poly(rng, static_cast<int>(rng() % 5));
    }
    const auto z = polynomial_solution(A, rho, rhs);
    if (z) {
      CHECK(A * z->derivative() + rho * *z == rhs);
      ++found;
    } else {
      const int N = solution_degree_bound(A, rho, rhs);
      for (int n = 0; n <= N + 2; ++n) CHECK_FALSE(solve_polynomial_ode(A, rho, rhs, n).exists);
      ++absent;
    }
  }
  CHECK(found >= 40);
  CHECK(absent > 0);
}

TEST_CASE("criterion_scan examples") {
  {
    const auto o = order_data(fold_hopf(q(-1), rt2(), rt2()), 3);
    const auto out = criterion_scan(3, o.k1, o.kk, o.part, o.prof);
    REQUIRE(out.fired.has_value());
    CHECK(*out.fired == Criterion::i);
  }
  {
    const auto o = order_data(fold_hopf(q(-1), q(1), rt2()), 3);
    const auto out = criterion_scan(3, o.k1, o.kk, o.part, o.prof);
    REQUIRE(out.fired.has_value());
    CHECK(*out.fired == Criterion::iv);
    CHECK(out.diagnostics.n_bar == 0);
    CHECK(*out.diagnostics.rho0 == q(2) * (rt2() - q(1)));
    CHECK(out.diagnostics.rho_tilde == UPoly(q(6) + q(6) * rt2()));
  }
  {
    const auto o = order_data(fold_hopf(q(-1), rt2(), q(1)), 3);
    const auto out = criterion_scan(3, o.k1, o.kk, o.part, o.prof);
    CHECK(out.diagnostics.rho == UPoly(q(2) * rt2()));
    CHECK(out.diagnostics.n_bar == 1);
    REQUIRE(out.fired.has_value());
    CHECK(*out.fired == Criterion::v);
  }
  {
    // Precondition: kappa_kn vanishing at a shared root blocks every criterion.
    const RatFunc k1(ONE, X * (X - ONE));
    const RatFunc kk(X - ONE, X * X);
    const auto part = partition_roots(k1, kk);
    REQUIRE(find_shared(part, X - ONE) != nullptr);
    CHECK(find_shared(part, X - ONE)->a1 == -1);
    const auto out = criterion_scan(2, k1, kk, part, simplicity_profile(k1, part, 2));
    CHECK_FALSE(out.precondition_failures.empty());
    CHECK_FALSE(out.fired.has_value());
  }
}

TEST_CASE("criterion iii on the double-Hopf instance") {
  const auto o = order_data(double_hopf1(q(1), rt2(), q(1, 2), q(1)), 3);
  const auto out = criterion_scan(3, o.k1, o.kk, o.part, o.prof);
  REQUIRE(out.fired.has_value());
  CHECK(*out.fired == Criterion::iii);
  CHECK_FALSE(out.diagnostics.solution_exists);
  CHECK_FALSE(h2_failure_witness(3, o.k1, o.kk, o.part, o.prof).has_value());
}

TEST_CASE("h2_failure_witness on a constructed order") {
  // kappa_1 = (-2 xi^2 - 2 sqrt2) / xi^3, kappa_2 with one extra power of xi:
  // A = xi^3, rho = -3 xi^2 - 2 sqrt2, and z = xi^2 + 1 solves A z' + rho z = kappa_2n.
  const RatFunc k1(X * X * q(-2) - UPoly(q(2) * rt2()), pow(X, 3));
  const UPoly k2n = -pow(X, 4) - X * X * (q(3) + q(2) * rt2()) - UPoly(q(2) * rt2());
  const RatFunc k2(k2n, pow(X, 4));
  const auto part = partition_roots(k1, k2, kQ2);
  REQUIRE(part.shared.size() == 1);
  CHECK(part.rad1 == X);
  const auto prof = simplicity_profile(k1, part, 2);
  CHECK(build_rho(k1, part, 2) == X * X * q(-3) - UPoly(q(2) * rt2()));
  const auto w = h2_failure_witness(2, k1, k2, part, prof);
  REQUIRE(w.has_value());
  CHECK(w->solution == X * X + ONE);
  CHECK(witness_solves_theta_equation(*w, k1, k2));
  CHECK(w->theta_log_derivative == w->theta_ratio.derivative() / w->theta_ratio + k1 * RatFunc(QuadExt(1L)));

  const auto out = criterion_scan(2, k1, k2, part, prof);
  CHECK_FALSE(out.fired.has_value());
  CHECK(out.h2_failure.has_value());

  // An order where criterion (i) fires never yields a witness.
  const auto o = order_data(fold_hopf(q(-1), rt2(), rt2()), 3);
  CHECK_FALSE(h2_failure_witness(3, o.k1, o.kk, o.part, o.prof).has_value());
}

TEST_CASE("witnesses found by the scan solve the theta equation") {
  std::mt19937_64 rng(123);
  int witnesses = 0;
  for (int t = 0; t < 40; ++t) {
    // Rational parameters make H2 fail often.
    const auto rs = t % 2 == 0 ? fold_hopf(q(static_cast<long>(rng() % 5)) - q(2), q(1 + static_cast<long>(rng() % 3)),
                                           q(static_cast<long>(rng() % 7)) - q(3), 1)
                               : double_hopf1(q(1), q(static_cast<long>(rng() % 5)) - q(2),
                                              q(static_cast<long>(rng() % 5)) - q(2), q(static_cast<long>(rng() % 3)), 1);
    const auto vd = kappas(rs, 7);
    if (vd.kappa(1).num().is_zero()) continue;
    for (int k = 2; k <= 7; ++k) {
      if (vd.kappa(k).is_zero()) continue;
      const auto part = partition_roots(vd.kappa(1), vd.kappa(k), kQ2);
      const auto prof = simplicity_profile(vd.kappa(1), part, k);
      const auto out = criterion_scan(k, vd.kappa(1), vd.kappa(k), part, prof);
      CHECK_FALSE((out.fired.has_value() && out.h2_failure.has_value()));
      if (out.h2_failure) {
        CHECK(witness_solves_theta_equation(*out.h2_failure, vd.kappa(1), vd.kappa(k)));
        CHECK(poly_gcd(out.h2_failure->solution, part.rad1 * part.radk) == ONE);
        ++witnesses;
      }
    }
  }
  CHECK(witnesses > 5);
}

TEST_CASE("certify examples") {
  using clock = std::chrono::steady_clock;
  SUBCASE("criterion iv") {
    for (int s : {1, -1}) {
      const auto t0 = clock::now();
      const auto fh = fold_hopf(q(-1), q(1), rt2(), s);
      const auto c = certify(fh.system, fh.curve, 9);
      CHECK(c.status == Status::nonintegrable);
      CHECK(c.firing_order == 3);
      CHECK(c.firing_criterion == Criterion::iv);
      CHECK(clock::now() - t0 < std::chrono::seconds(2));
    }
  }
  SUBCASE("H1 failure") {
    const auto fh = fold_hopf(q(-1), q(2), q(3));
    const auto c = certify(fh.system, fh.curve, 9);
    CHECK(c.status == Status::inconclusive);
    CHECK_FALSE(c.h1.holds);
    CHECK(c.h1.rational_residues.size() == 2);
  }
  SUBCASE("inapplicable") {
    PlanarSystem s{BiPoly(1L), BiPoly::eta(), FieldSpec(), "linear"};
    const auto c = certify(s, CurveData{RatFunc()}, 9);
    CHECK(c.status == Status::inapplicable);
  }
  SUBCASE("not an integral curve") {
    const auto fh = fold_hopf(q(-1), q(1), rt2());
    CHECK_THROWS_AS(certify(fh.system, CurveData{RatFunc(1L)}, 9), std::invalid_argument);
  }
}

TEST_CASE("fired criteria re-evaluate from recomputed kappas") {
  std::mt19937_64 rng(77);
  int certified = 0;
  for (int t = 0; t < 20; ++t) {
    const auto rs = t % 2 == 0 ? fold_hopf(random_q2(rng), random_q2(rng), random_q2(rng), 1)
                               : double_hopf1(random_q2(rng, false), random_q2(rng), random_q2(rng), random_q2(rng), -1);
    const auto cert = certify(rs.system, rs.curve, 9);
    if (cert.status != Status::nonintegrable) continue;
    CHECK(cert.h1.holds);
    CHECK(cert.omega.regular_at_infinity);
    const int k = *cert.firing_order;
    const auto fresh = kappa_coefficients(rs.system, rs.curve, k);
    CHECK(criterion_predicate(*cert.firing_criterion, k, fresh.kappa(1), fresh.kappa(k), kQ2));
    ++certified;
  }
  CHECK(certified > 5);
}
