#include "pushtasep/qoscillator.hpp"

#include <stdexcept>

namespace pushtasep {

namespace {

// --- polynomial helpers in the variable q (PolyZ reused as poly-in-q) ---

using PolyQ = PolyZ;

PolyQ q_monomial(int e, const Rational& c = Rational(1)) {
    std::vector<Rational> v(static_cast<std::size_t>(e) + 1, Rational(0));
    v[e] = c;
    return PolyQ(std::move(v));
}

void poly_divmod(const PolyQ& a, const PolyQ& b, PolyQ& quot, PolyQ& rem) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    std::vector<Rational> r(a.coeffs());
    long db = b.degree();
    Rational lead = b.coeff(db);
    std::vector<Rational> q;
    while (static_cast<long>(r.size()) - 1 >= db) {
        long dr = static_cast<long>(r.size()) - 1;
        Rational f = r.back() / lead;
        if (static_cast<long>(q.size()) < dr - db + 1) q.resize(dr - db + 1, Rational(0));
        q[dr - db] = f;
        for (long c = 0; c <= db; ++c) r[dr - db + c] -= f * b.coeff(c);
        while (!r.empty() && is_zero(r.back())) r.pop_back();
        if (r.empty()) break;
    }
    quot = PolyQ(std::move(q));
    rem = PolyQ(std::move(r));
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) {
            Rational lead = b.coeff(b.degree());
            b = PolyQ(Rational(1) / lead) * b;  // monic remainders keep coefficients tame
        }
    }
    if (a.is_zero()) return a;
    return PolyQ(Rational(1) / a.coeff(a.degree())) * a;
}

// Rational function of q, denominator kept monic and coprime to numerator.
struct RatFuncQ {
    PolyQ num;
    PolyQ den{Rational(1)};

    void reduce() {
        if (num.is_zero()) {
            den = PolyQ(Rational(1));
            return;
        }
        PolyQ g = poly_gcd(num, den);
        if (g.degree() > 0) {
            PolyQ q, r;
            poly_divmod(num, g, q, r);
            num = q;
            poly_divmod(den, g, q, r);
            den = q;
        }
        Rational lead = den.coeff(den.degree());
        if (lead != Rational(1)) {
            PolyQ inv(Rational(1) / lead);
            num = inv * num;
            den = inv * den;
        }
    }
};

RatFuncQ rf_from(const PolyQ& p) { return RatFuncQ{p, PolyQ(Rational(1))}; }

RatFuncQ rf_add(const RatFuncQ& x, const RatFuncQ& y) {
    RatFuncQ r{x.num * y.den + y.num * x.den, x.den * y.den};
    r.reduce();
    return r;
}

RatFuncQ rf_mul(const RatFuncQ& x, const RatFuncQ& y) {
    RatFuncQ r{x.num * y.num, x.den * y.den};
    r.reduce();
    return r;
}

// 1 / (1 - q^e z) for integer e (negative e clears through q^{|e|}).
RatFuncQ rf_geom_inverse(int e, const Rational& z) {
    if (e >= 0) {
        PolyQ den = PolyQ(Rational(1)) - PolyQ(z) * q_monomial(e);
        if (den.is_zero()) throw std::domain_error("fock trace: geometric pole 1 - q^0 z = 0");
        RatFuncQ r{PolyQ(Rational(1)), den};
        r.reduce();
        return r;
    }
    // 1/(1 - q^{-|e|} z) = q^{|e|} / (q^{|e|} - z)
    RatFuncQ r{q_monomial(-e), q_monomial(-e) - PolyQ(z)};
    r.reduce();
    return r;
}

// --- q-oscillator word evaluation ---

enum class QOp { One, K, MQK, Ap, Am, Zero };

QOp l_entry(int a, int b, int i, int j) {
    if (a + b != i + j) return QOp::Zero;
    if (a == 0 && b == 0) return QOp::One;
    if (a == 1 && b == 1) return QOp::One;
    if (a == 1 && b == 0 && i == 1) return QOp::K;
    if (a == 0 && b == 1 && i == 0) return QOp::MQK;
    if (a == 1 && b == 0 && i == 0) return QOp::Ap;
    return QOp::Am;  // a == 0, b == 1, i == 1
}

using QPoly = std::map<int, QLaurent>;  // Q-degree -> Laurent coefficient in q

void qpoly_scale(QPoly& p, int dq_deg, int q_exp, const Rational& c) {
    QPoly out;
    for (const auto& [d, lau] : p)
        for (const auto& [e, v] : lau) {
            Rational nv = c * v;
            if (!is_zero(nv)) out[d + dq_deg][e + q_exp] += nv;
        }
    for (auto& [d, lau] : out)
        for (auto it = lau.begin(); it != lau.end();)
            it = is_zero(it->second) ? lau.erase(it) : std::next(it);
    p = std::move(out);
}

QPoly qpoly_sum(const QPoly& x, const QPoly& y) {
    QPoly out = x;
    for (const auto& [d, lau] : y)
        for (const auto& [e, v] : lau) {
            out[d][e] += v;
            if (is_zero(out[d][e])) out[d].erase(e);
        }
    return out;
}

}  // namespace

std::map<int, QLaurent> fock_word_trace_data(const Multiplicity& a, const Multiplicity& b,
                                             const Multiplicity& i, const Multiplicity& j) {
    const std::size_t width = a.size();
    if (b.size() != width || i.size() != width || j.size() != width)
        throw std::invalid_argument("fock_word_trace_data: array lengths differ");

    QPoly p;
    p[0][0] = Rational(1);
    int shift = 0;
    // rightmost factor in the trace carries component 0 and acts first
    for (std::size_t r = 0; r < width; ++r) {
        switch (l_entry(a[r], b[r], i[r], j[r])) {
            case QOp::Zero:
                return {};
            case QOp::One:
                break;
            case QOp::K:
                qpoly_scale(p, 1, shift, Rational(1));
                break;
            case QOp::MQK:
                qpoly_scale(p, 1, shift + 1, Rational(-1));
                break;
            case QOp::Ap:
                ++shift;
                break;
            case QOp::Am: {
                QPoly lowered = p;
                qpoly_scale(lowered, 2, 2 * shift, Rational(-1));
                p = qpoly_sum(p, lowered);  // (1 - q^{2 shift} Q^2)
                --shift;
                break;
            }
        }
    }
    if (shift != 0) return {};
    for (auto it = p.begin(); it != p.end();)
        it = it->second.empty() ? p.erase(it) : std::next(it);
    return p;
}

Rational l_trace(int n, const Rational& q, const Rational& z, const Multiplicity& a,
                 const Multiplicity& b, const Multiplicity& i, const Multiplicity& j) {
    if (is_zero(q)) throw std::domain_error("l_trace: q = 0");
    if (static_cast<int>(a.size()) != n + 1)
        throw std::invalid_argument("l_trace: arrays must have length n+1");
    auto data = fock_word_trace_data(a, b, i, j);
    Rational total(0);
    for (const auto& [d, lau] : data) {
        Rational coeff(0);
        for (const auto& [e, v] : lau) coeff += v * rational_pow(q, e);
        Rational den = Rational(1) - rational_pow(q, d) * z;
        if (is_zero(den))
            throw std::domain_error("l_trace: geometric denominator 1 - q^" + std::to_string(d) +
                                    " z vanishes");
        total += coeff / den;
    }
    return total;
}

namespace {

RatFuncQ rf_from_laurent(const QLaurent& lau) {
    if (lau.empty()) return rf_from(PolyQ());
    int emin = lau.begin()->first;
    int off = emin < 0 ? -emin : 0;
    std::vector<Rational> coeffs(lau.rbegin()->first + off + 1, Rational(0));
    for (const auto& [e, v] : lau) coeffs[e + off] = v;
    RatFuncQ r{PolyQ(std::move(coeffs)), q_monomial(off)};
    r.reduce();
    return r;
}

}  // namespace

Rational s_k1_3d_element(int n, int k, const Multiplicity& a, int b, const Multiplicity& i, int j,
                         const Rational& t, const Rational& z) {
    Multiplicity eb(n + 1, 0), ej(n + 1, 0);
    eb[b] = 1;
    ej[j] = 1;
    auto data = fock_word_trace_data(a, eb, i, ej);
    if (data.empty()) return Rational(0);

    // Tr((q^{1-k} z)^h ...) shifts each geometric exponent by 1 - k.
    RatFuncQ trace = rf_from(PolyQ());
    for (const auto& [d, lau] : data)
        trace = rf_add(trace, rf_mul(rf_from_laurent(lau), rf_geom_inverse(d + 1 - k, z)));

    int eta = 0;
    for (int s = b + 1; s <= n; ++s) eta += a[s];
    for (int r = 0; r < j; ++r) eta -= i[r];
    const int gauge = k - 1 + eta;

    // (1 - z)(1 - q^2 z) (-q)^{k-1+eta} * trace
    RatFuncQ value = rf_mul(trace, rf_from(PolyQ(Rational(1) - z)));
    value = rf_mul(value, rf_from(PolyQ(Rational(1)) - PolyQ(z) * q_monomial(2)));
    if (gauge >= 0)
        value = rf_mul(value, rf_from(q_monomial(gauge)));
    else
        value = rf_mul(value, RatFuncQ{PolyQ(Rational(1)), q_monomial(-gauge)});
    if (((gauge % 2) + 2) % 2 == 1) value.num = -value.num;

    if (value.num.is_zero()) return Rational(0);
    // the reduced denominator must be a monomial c*q^m
    long dden = value.den.degree();
    for (long c = 0; c < dden; ++c)
        if (!is_zero(value.den.coeff(c)))
            throw std::domain_error("s_k1_3d: trace pole survives the gauge prefactor");
    Rational dc = value.den.coeff(dden);

    Rational out(0);
    for (long e = 0; e <= value.num.degree(); ++e) {
        Rational c = value.num.coeff(e);
        if (is_zero(c)) continue;
        long expo = e - dden;
        if (expo % 2 != 0)
            throw std::logic_error("s_k1_3d: odd residual power of q (implementation bug)");
        out += c / dc * rational_pow(t, expo / 2);
    }
    return out;
}

SparseMatrix<Rational> s_k1_3d(int n, int k, const Rational& t, const Rational& z) {
    if (k < 0 || k > n + 1) throw std::invalid_argument("s_k1_3d: k out of range");
    auto arrays = enumerate_hardcore(n, k);
    const std::size_t dim = arrays.size() * (n + 1);
    SparseMatrix<Rational> m(dim, dim);
    for (std::size_t ai = 0; ai < arrays.size(); ++ai)
        for (int b = 0; b <= n; ++b)
            for (std::size_t ii = 0; ii < arrays.size(); ++ii)
                for (int j = 0; j <= n; ++j) {
                    Rational v = s_k1_3d_element(n, k, arrays[ai], b, arrays[ii], j, t, z);
                    if (!is_zero(v)) m.set(ai * (n + 1) + b, ii * (n + 1) + j, v);
                }
    return m;
}

}  // namespace pushtasep
