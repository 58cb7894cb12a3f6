#pragma once

#include <string>
#include <vector>

#include "pushtasep/rational.hpp"

namespace pushtasep {

// Univariate polynomial in the spectral parameter z, dense by degree.
// Transfer-matrix entries have degree <= L, so dense storage is cheap.
class PolyZ {
public:
    PolyZ() = default;
    PolyZ(const Rational& c0) : c_{c0} { trim(); }
    PolyZ(long c0) : c_{Rational(c0)} { trim(); }
    explicit PolyZ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    // c0 + c1*z
    static PolyZ linear(const Rational& c0, const Rational& c1) {
        return PolyZ(std::vector<Rational>{c0, c1});
    }
    static PolyZ variable() { return linear(Rational(0), Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coeff(std::size_t d) const {
        return d < c_.size() ? c_[d] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& z0) const {
        Rational acc(0);
        for (std::size_t d = c_.size(); d-- > 0;) acc = acc * z0 + c_[d];
        return acc;
    }

    Rational derivative_at_zero() const { return coeff(1); }

    PolyZ derivative() const {
        if (c_.size() <= 1) return PolyZ();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
        return PolyZ(std::move(d));
    }

    PolyZ operator-() const {
        PolyZ r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    PolyZ& operator+=(const PolyZ& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
        trim();
        return *this;
    }
    PolyZ& operator-=(const PolyZ& o) { return *this += -o; }

    friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
    friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }

    friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
        if (a.is_zero() || b.is_zero()) return PolyZ();
        std::vector<Rational> p(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
        return PolyZ(std::move(p));
    }
    friend PolyZ operator*(const Rational& s, const PolyZ& p) { return PolyZ(s) * p; }
    PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }

    friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyZ& a, const PolyZ& b) { return !(a == b); }

    // ["c0","c1",...]; empty list for the zero polynomial
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(rational_str(x));
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && pushtasep::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline bool is_zero(const PolyZ& p) { return p.is_zero(); }

}  // namespace pushtasep
