#pragma once

#include <array>
#include <optional>
#include <vector>

#include "taujac/ratpoly.hpp"

namespace taujac {

/// Identifies a family member P_n^(alpha,beta). No intrinsic restriction on
/// the parameters: every derived object is a formal polynomial expression,
/// valid whenever its coefficients are defined.
struct JacobiParams {
    int n = 0;
    Rational alpha;
    Rational beta;

    friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// values[k] = (d^k/dx^k P_n^(alpha,beta))(1) for k = 0..n.
struct DerivTower {
    JacobiParams params;
    std::vector<Rational> values;
};

/// Rising factorial (x)_k = x (x+1) ... (x+k-1); (x)_0 = 1. The classical
/// normalization P_n(1) = (alpha+1)_n / n! reads pochhammer(alpha+1, n)/n!
/// in this convention.
Rational pochhammer(const Rational& x, int k);

/// All derivatives of P_n^(alpha,beta) at x = 1 by the closed form
/// values[k] = 2^-k (n+alpha+beta+1)_k (alpha+k+1)_{n-k} / (n-k)!.
DerivTower deriv_tower(const JacobiParams& p);

/// Independent route to the same tower: expand P_n in powers of (1-x)/2 and
/// differentiate the series termwise. Used as a cross-check oracle; the
/// builder asserts agreement with deriv_tower in debug builds.
std::vector<Rational> deriv_tower_series(const JacobiParams& p);

/// phi_n(mu): degree [n/2], coefficient k is the (2k)-th derivative at 1.
RatPoly phi(const JacobiParams& p);
RatPoly phi(int n, const Rational& alpha, const Rational& beta);

/// Full tower contracted against mu^k, orders 0..n. With beta_shift the
/// tower is taken at (alpha, beta-1), giving the stability intermediary
/// Phi_n(1; mu); without it, at (alpha, beta) as a plain utility form.
RatPoly phi_full(const JacobiParams& p, bool beta_shift_for_Phi);

/// f(1;mu) = sum_k mu^k (A d^k P_n(1) + mu d^k P_{n-1}(1)); degree n.
RatPoly f_poly(const JacobiParams& p, const Rational& A);
/// g(1;mu) = sum_k mu^k (mu d^k P_n(1) + A d^k P_{n-1}(1)); degree n+1.
RatPoly g_poly(const JacobiParams& p, const Rational& A);

enum class IdentityTag {
    FlSumm1,
    FlSumm2,
    FlSumm3,
    FlSumm4,
    FlDiff1,
    FlDiff2,
    FlDiff3,
    FlDiff4,
    FlDiff5,
    ChainRel1,
    ChainRel2,
    MainRel,
    PhiDiff,
};

constexpr std::array<IdentityTag, 13> all_identities() {
    return {IdentityTag::FlSumm1, IdentityTag::FlSumm2, IdentityTag::FlSumm3,
            IdentityTag::FlSumm4, IdentityTag::FlDiff1, IdentityTag::FlDiff2,
            IdentityTag::FlDiff3, IdentityTag::FlDiff4, IdentityTag::FlDiff5,
            IdentityTag::ChainRel1, IdentityTag::ChainRel2, IdentityTag::MainRel,
            IdentityTag::PhiDiff};
}

const char* identity_name(IdentityTag id);

/// Compares both sides of the tagged relation as canonical polynomials;
/// true iff they agree exactly. MainRel requires A. Throws std::domain_error
/// ("identity undefined at parameters") when a denominator of the relation
/// vanishes, and std::invalid_argument when A is missing where required.
bool verify_identity(IdentityTag id, const JacobiParams& p,
                     const std::optional<Rational>& A = std::nullopt);

}  // namespace taujac
