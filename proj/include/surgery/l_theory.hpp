#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surgery/duality.hpp"
#include "surgery/int_matrix.hpp"

namespace surgery {

/// Signature of a symmetric integer form by exact rational congruence
/// diagonalization; the radical contributes 0.
long signature(const SymmetricForm& f);
long signature(const IntMatrix& symmetric);

/// signature/8 for an even unimodular form (domain error otherwise).
long quadratic_signature_over_8(const SymmetricForm& f);

/// Quadratic form over GF(2): alternating bilinear matrix λ plus the values
/// of q on basis vectors; in characteristic 2 the bilinear form does not
/// determine q.
struct QuadraticFormGF2 {
    int rank = 0;
    std::vector<std::vector<uint8_t>> bilinear;  // symmetric, zero diagonal
    std::vector<uint8_t> q_basis;

    QuadraticFormGF2(std::vector<std::vector<uint8_t>> lambda, std::vector<uint8_t> q);

    uint8_t q(const std::vector<uint8_t>& x) const;
    uint8_t pairing(const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) const;
    bool nonsingular() const;

    QuadraticFormGF2 orthogonal_sum(const QuadraticFormGF2& o) const;
};

/// The democratic invariant: 0 iff q vanishes on a majority of vectors.
int arf_democratic(const QuadraticFormGF2& f);
/// Σ q(a_i) q(b_i) over a symplectic basis.
int arf_symplectic(const QuadraticFormGF2& f);
/// Democratic invariant, cross-checked against the symplectic formula.
int arf(const QuadraticFormGF2& f);

enum class LFlavor { quadratic, symmetric, hyperquadratic };

struct LGroupDescriptor {
    LFlavor flavor = LFlavor::quadratic;
    int n = 0;
    std::string group;                // "Z", "Z2", "Z8" or "0"
    std::string generator_invariant;  // "signature/8", "Arf invariant", ...

    bool operator==(const LGroupDescriptor& o) const = default;
};

/// Homotopy groups of the three L-spectra of the integers: the 1-connective
/// quadratic table, the symmetric table and the hyperquadratic table.
LGroupDescriptor l_group_table(LFlavor flavor, int n);

std::string to_string(LFlavor flavor);

/// The rank-8 even unimodular positive form of signature 8.
IntMatrix e8_form();
/// The hyperbolic plane [[0,1],[1,0]].
IntMatrix hyperbolic_form();
/// Block sum of symmetric forms.
IntMatrix orthogonal_sum(const IntMatrix& a, const IntMatrix& b);

} // namespace surgery
