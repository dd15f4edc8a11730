#include <catch2/catch_amalgamated.hpp>

#include "clgauge/lie.hpp"
#include "clgauge/random.hpp"
#include "oracles.hpp"

using namespace clg;

TEST_CASE("su(2) bracket table and squares") {
  REQUIRE(norm_inf(commutator(tau(1), tau(2)) - tau(3) * 2.0) == 0.0);
  REQUIRE(norm_inf(commutator(tau(2), tau(3)) - tau(1) * 2.0) == 0.0);
  REQUIRE(norm_inf(commutator(tau(3), tau(1)) - tau(2) * 2.0) == 0.0);
  for (int k = 1; k <= 3; ++k) {
    REQUIRE(norm_inf(tau(k) * tau(k) + unit()) == 0.0);
    REQUIRE(norm_inf(dagger(tau(k)) + tau(k)) == 0.0);
    REQUIRE(norm_inf(commutator(beta(), tau(k))) == 0.0);
  }
  REQUIRE_THROWS_AS(tau(0), std::out_of_range);
  REQUIRE_THROWS_AS(tau(4), std::out_of_range);
}

TEST_CASE("closed-form exp_g3 matches the series oracle") {
  Rng rng(21);
  for (int t = 0; t < 500; ++t) {
    L3Element s = random_L3(rng);
    REQUIRE(norm_inf(exp_g3(s) - oracle::series_exp(s.to_multivector())) <= 1e-12);
  }
  // near the removable singularity
  L3Element tiny{{1e-9, -2e-9, 3e-10}};
  REQUIRE(norm_inf(exp_g3(tiny) - oracle::series_exp(tiny.to_multivector())) <= 1e-12);
  REQUIRE(norm_inf(exp_g3(L3Element{}) - unit()) == 0.0);
}

TEST_CASE("exp_l4 matches the series oracle and lands in the unitary group") {
  Rng rng(22);
  for (int t = 0; t < 500; ++t) {
    L4Element s = random_L4(rng);
    Multivector S = exp_l4(s);
    REQUIRE(norm_inf(S - oracle::series_exp(s.to_multivector())) <= 1e-12);
    REQUIRE(norm_inf(dagger(S) * S - unit()) <= 1e-12);
  }
}

TEST_CASE("exp_gchi matches the oracle exponential of s*chi") {
  Rng rng(23);
  Multivector x = chi();
  for (int t = 0; t < 500; ++t) {
    L4Element s = random_L4(rng);
    Multivector S = exp_gchi(s, x);
    REQUIRE(norm_inf(S - oracle::series_exp(s.to_multivector() * x)) <= 1e-12);
    REQUIRE(norm_inf(dagger(S) * S - unit()) <= 1e-12);
    REQUIRE(in_Gchi(S, x));
    REQUIRE(norm_inf(S * exp_gchi(-s, x) - unit()) <= 1e-12);
  }
}

TEST_CASE("G3 membership and group laws") {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    L3Element a = random_L3(rng), b = random_L3(rng);
    Multivector S = exp_g3(a), T = exp_g3(b);
    REQUIRE(in_G3(S));
    REQUIRE(in_G3(S * T));
    REQUIRE(norm_inf(S * exp_g3(-a) - unit()) <= 1e-13);
  }
  REQUIRE_FALSE(in_G3(beta()));           // odd
  REQUIRE_FALSE(in_G3(unit() * 2.0));     // not unitary
  REQUIRE_FALSE(in_G3(chi()));            // not real
}

TEST_CASE("Lie algebra membership predicates") {
  Rng rng(25);
  Multivector x = chi();
  for (int t = 0; t < 200; ++t) {
    REQUIRE(in_L3(random_L3(rng).to_multivector()));
    REQUIRE(in_L4(random_L4(rng).to_multivector()));
    Multivector r = random_Lchi(rng, x);
    REQUIRE(in_Lchi(r, x));
    Multivector r2 = random_Lchi(rng, x);
    REQUIRE(in_Lchi(commutator(r, r2), x));  // closure
  }
  REQUIRE_FALSE(in_L3(theta()));
  REQUIRE_FALSE(in_L3(tau(1) * cplx(0.0, 1.0)));
  REQUIRE_FALSE(in_L4(tau(1) * x));  // complex coefficients
  REQUIRE_FALSE(in_Lchi(tau(1), x));
  REQUIRE(in_L3(Multivector{}));
}

TEST_CASE("L3 brackets stay in L3; L4 adds a central direction") {
  Rng rng(26);
  for (int t = 0; t < 100; ++t) {
    Multivector a = random_L3(rng).to_multivector();
    Multivector b = random_L4(rng).to_multivector();
    REQUIRE(in_L3(commutator(a, random_L3(rng).to_multivector())));
    REQUIRE(norm_inf(commutator(theta(), b)) <= 1e-15);  // theta central in L4
  }
}

TEST_CASE("unitary_inverse is dagger and rejects non-unitary input") {
  Rng rng(27);
  Multivector x = chi();
  for (int t = 0; t < 100; ++t) {
    Multivector S = exp_gchi(random_L4(rng), x);
    Multivector Sinv = unitary_inverse(S);
    REQUIRE(norm_inf(S * Sinv - unit()) <= 1e-12);
    REQUIRE(norm_inf(Sinv - dagger(S)) == 0.0);
  }
  REQUIRE_THROWS_AS(unitary_inverse(unit() * 2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(unitary_inverse(Multivector{}), std::invalid_argument);
}
