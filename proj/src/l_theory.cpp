#include "surgery/l_theory.hpp"

#include <algorithm>

namespace surgery {

long signature(const IntMatrix& symmetric) {
    if (!symmetric.is_symmetric())
        throw domain_error("signature: matrix is not symmetric");
    const int n = symmetric.rows();
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = Rational(symmetric.at(r, c));

    auto swap_rc = [&](int a, int b) {
        std::swap(m[static_cast<size_t>(a)], m[static_cast<size_t>(b)]);
        for (int r = 0; r < n; ++r)
            std::swap(m[static_cast<size_t>(r)][static_cast<size_t>(a)],
                      m[static_cast<size_t>(r)][static_cast<size_t>(b)]);
    };
    auto add_rc = [&](int dst, int src, const Rational& f) {
        for (int c = 0; c < n; ++c)
            m[static_cast<size_t>(dst)][static_cast<size_t>(c)] +=
                f * m[static_cast<size_t>(src)][static_cast<size_t>(c)];
        for (int r = 0; r < n; ++r)
            m[static_cast<size_t>(r)][static_cast<size_t>(dst)] +=
                f * m[static_cast<size_t>(r)][static_cast<size_t>(src)];
    };

    long pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int diag = -1;
            for (int j = k + 1; j < n; ++j)
                if (m[static_cast<size_t>(j)][static_cast<size_t>(j)] != 0) {
                    diag = j;
                    break;
                }
            if (diag >= 0) {
                swap_rc(k, diag);
            } else {
                // all remaining diagonal entries vanish; pull in an
                // off-diagonal entry (the hyperbolic case)
                int bi = -1, bj = -1;
                for (int i = k; i < n && bi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0)
                    break;  // zero block: the radical
                add_rc(bi, bj, Rational(1));  // now m[bi][bi] = 2 m[bi][bj] != 0
                swap_rc(k, bi);
            }
        }
        const Rational pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        if (pivot > 0)
            ++pos;
        else
            ++neg;
        for (int r = k + 1; r < n; ++r) {
            const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(k)];
            if (f != 0)
                add_rc(r, k, -f / pivot);
        }
    }
    return pos - neg;
}

long signature(const SymmetricForm& f) {
    return signature(f.matrix);
}

long quadratic_signature_over_8(const SymmetricForm& f) {
    if (!f.matrix.is_symmetric())
        throw domain_error("quadratic_signature_over_8: matrix is not symmetric");
    if (!f.is_even())
        throw domain_error("quadratic_signature_over_8: form has odd diagonal entries");
    if (!f.is_unimodular())
        throw domain_error("quadratic_signature_over_8: form is not unimodular");
    long s = signature(f);
    if (s % 8 != 0)
        throw structural_error("even unimodular form with signature not divisible by 8");
    return s / 8;
}

QuadraticFormGF2::QuadraticFormGF2(std::vector<std::vector<uint8_t>> lambda,
                                   std::vector<uint8_t> q)
    : rank(static_cast<int>(q.size())), bilinear(std::move(lambda)), q_basis(std::move(q)) {
    if (static_cast<int>(bilinear.size()) != rank)
        throw domain_error("quadratic form: bilinear matrix size mismatch");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(bilinear[static_cast<size_t>(i)].size()) != rank)
            throw domain_error("quadratic form: bilinear matrix not square");
        if (bilinear[static_cast<size_t>(i)][static_cast<size_t>(i)] % 2 != 0)
            throw domain_error("quadratic form: bilinear form must be even-diagonal");
        for (int j = 0; j < rank; ++j)
            if ((bilinear[static_cast<size_t>(i)][static_cast<size_t>(j)] ^
                 bilinear[static_cast<size_t>(j)][static_cast<size_t>(i)]) & 1)
                throw domain_error("quadratic form: bilinear matrix not symmetric");
        for (auto& v : bilinear[static_cast<size_t>(i)])
            v &= 1;
    }
    for (auto& v : q_basis)
        v &= 1;
}

uint8_t QuadraticFormGF2::q(const std::vector<uint8_t>& x) const {
    uint8_t val = 0;
    for (int i = 0; i < rank; ++i) {
        if (!(x[static_cast<size_t>(i)] & 1))
            continue;
        val ^= q_basis[static_cast<size_t>(i)];
        for (int j = i + 1; j < rank; ++j)
            if (x[static_cast<size_t>(j)] & 1)
                val ^= bilinear[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return val;
}

uint8_t QuadraticFormGF2::pairing(const std::vector<uint8_t>& x,
                                  const std::vector<uint8_t>& y) const {
    uint8_t val = 0;
    for (int i = 0; i < rank; ++i)
        if (x[static_cast<size_t>(i)] & 1)
            for (int j = 0; j < rank; ++j)
                if (y[static_cast<size_t>(j)] & 1)
                    val ^= bilinear[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return val;
}

bool QuadraticFormGF2::nonsingular() const {
    auto m = bilinear;
    int rk = 0;
    for (int c = 0; c < rank; ++c) {
        int piv = -1;
        for (int r = rk; r < rank; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] & 1) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[static_cast<size_t>(rk)], m[static_cast<size_t>(piv)]);
        for (int r = 0; r < rank; ++r)
            if (r != rk && (m[static_cast<size_t>(r)][static_cast<size_t>(c)] & 1))
                for (int j = 0; j < rank; ++j)
                    m[static_cast<size_t>(r)][static_cast<size_t>(j)] ^=
                        m[static_cast<size_t>(rk)][static_cast<size_t>(j)];
        ++rk;
    }
    return rk == rank;
}

QuadraticFormGF2 QuadraticFormGF2::orthogonal_sum(const QuadraticFormGF2& o) const {
    int n = rank + o.rank;
    std::vector<std::vector<uint8_t>> lambda(static_cast<size_t>(n),
                                             std::vector<uint8_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            lambda[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                bilinear[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int i = 0; i < o.rank; ++i)
        for (int j = 0; j < o.rank; ++j)
            lambda[static_cast<size_t>(rank + i)][static_cast<size_t>(rank + j)] =
                o.bilinear[static_cast<size_t>(i)][static_cast<size_t>(j)];
    std::vector<uint8_t> q = q_basis;
    q.insert(q.end(), o.q_basis.begin(), o.q_basis.end());
    return QuadraticFormGF2(std::move(lambda), std::move(q));
}

int arf_democratic(const QuadraticFormGF2& f) {
    if (!f.nonsingular())
        throw domain_error("arf: bilinear form is singular");
    if (f.rank > 24)
        throw domain_error("arf_democratic: rank too large for enumeration");
    long zeros = 0;
    const long total = 1L << f.rank;
    std::vector<uint8_t> x(static_cast<size_t>(f.rank));
    for (long mask = 0; mask < total; ++mask) {
        for (int i = 0; i < f.rank; ++i)
            x[static_cast<size_t>(i)] = static_cast<uint8_t>((mask >> i) & 1);
        if (f.q(x) == 0)
            ++zeros;
    }
    return zeros * 2 > total ? 0 : 1;
}

int arf_symplectic(const QuadraticFormGF2& f) {
    if (!f.nonsingular())
        throw domain_error("arf: bilinear form is singular");
    std::vector<std::vector<uint8_t>> basis;
    for (int i = 0; i < f.rank; ++i) {
        std::vector<uint8_t> e(static_cast<size_t>(f.rank), 0);
        e[static_cast<size_t>(i)] = 1;
        basis.push_back(std::move(e));
    }
    int arf = 0;
    while (!basis.empty()) {
        std::vector<uint8_t> a = basis.front();
        int partner = -1;
        for (size_t j = 1; j < basis.size(); ++j)
            if (f.pairing(a, basis[j]) & 1) {
                partner = static_cast<int>(j);
                break;
            }
        if (partner < 0)
            throw structural_error("arf_symplectic: no symplectic partner in nonsingular form");
        std::vector<uint8_t> b = basis[static_cast<size_t>(partner)];
        arf ^= (f.q(a) & f.q(b)) & 1;
        std::vector<std::vector<uint8_t>> next;
        for (size_t j = 1; j < basis.size(); ++j) {
            if (static_cast<int>(j) == partner)
                continue;
            std::vector<uint8_t> v = basis[j];
            if (f.pairing(v, b) & 1)
                for (int i = 0; i < f.rank; ++i)
                    v[static_cast<size_t>(i)] ^= a[static_cast<size_t>(i)];
            if (f.pairing(v, a) & 1)
                for (int i = 0; i < f.rank; ++i)
                    v[static_cast<size_t>(i)] ^= b[static_cast<size_t>(i)];
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    return arf;
}

int arf(const QuadraticFormGF2& f) {
    int dem = arf_democratic(f);
    if (dem != arf_symplectic(f))
        throw structural_error("arf: democratic and symplectic computations disagree");
    return dem;
}

LGroupDescriptor l_group_table(LFlavor flavor, int n) {
    if (n < 0)
        throw domain_error("l_group_table: n must be non-negative");
    LGroupDescriptor d;
    d.flavor = flavor;
    d.n = n;
    d.group = "0";
    switch (flavor) {
    case LFlavor::quadratic:
        if (n == 0)
            break;  // 1-connective: π_0 killed
        if (n % 4 == 0) {
            d.group = "Z";
            d.generator_invariant = "signature/8";
        } else if (n % 4 == 2) {
            d.group = "Z2";
            d.generator_invariant = "Arf invariant";
        }
        break;
    case LFlavor::symmetric:
        if (n % 4 == 0) {
            d.group = "Z";
            d.generator_invariant = "signature";
        } else if (n % 4 == 1) {
            d.group = "Z2";
            d.generator_invariant = "deRham invariant";
        }
        break;
    case LFlavor::hyperquadratic:
        if (n == 0)
            d.group = "Z";
        else if (n % 4 == 0)
            d.group = "Z8";
        else if (n % 4 == 2 || n % 4 == 3)
            d.group = "Z2";
        break;
    }
    return d;
}

std::string to_string(LFlavor flavor) {
    switch (flavor) {
    case LFlavor::quadratic:
        return "quadratic";
    case LFlavor::symmetric:
        return "symmetric";
    case LFlavor::hyperquadratic:
        return "hyperquadratic";
    }
    return "";
}

IntMatrix e8_form() {
    // E8 Cartan matrix: chain 1-2-3-4-5-6-7 with node 8 attached to node 5
    IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
        m.at(i, i) = 2;
    auto bond = [&](int a, int b) {
        m.at(a, b) = -1;
        m.at(b, a) = -1;
    };
    for (int i = 0; i + 1 < 7; ++i)
        bond(i, i + 1);
    bond(4, 7);
    return m;
}

IntMatrix hyperbolic_form() {
    IntMatrix m(2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    return m;
}

IntMatrix orthogonal_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return m;
}

} // namespace surgery
