#include "ssr/beta_polynomials.hpp"

#include <stdexcept>

namespace ssr {

namespace {

using Big = std::vector<BigInt>;

void trim(Big& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Big add(const Big& a, const Big& b) {
    Big r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Big sub(const Big& a, const Big& b) {
    Big r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Big mul(const Big& a, const Big& b) {
    Big r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Exact division; the stationarity structure guarantees zero remainder and
// integer quotient coefficients.
Big div_exact(Big num, const Big& den) {
    if (num.size() < den.size()) throw std::logic_error("beta polynomial division underflow");
    Big q(num.size() - den.size() + 1, BigInt(0));
    const BigInt& lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& top = num[den.size() - 1 + k];
        if (top % lead != 0) throw std::logic_error("beta polynomial division is not exact");
        q[k] = top / lead;
        if (q[k] == 0) continue;
        for (std::size_t i = 0; i < den.size(); ++i) num[i + k] -= q[k] * den[i];
    }
    for (const BigInt& c : num) {
        if (c != 0) throw std::logic_error("beta polynomial division left a remainder");
    }
    return q;
}

}  // namespace

PolynomialTable polynomial_table(int total) {
    if (total < 0) throw std::invalid_argument("polynomial_table: total must be >= 0");
    PolynomialTable table;
    table.total = total;
    table.polys.reserve(static_cast<std::size_t>(total) + 1);
    table.polys.push_back({{BigInt(1)}});
    if (total == 0) return table;
    table.polys.push_back({{BigInt(-1), BigInt(1)}});  // beta - 1

    const Big beta_minus_one = {BigInt(-1), BigInt(1)};
    for (int n = 1; n < total; ++n) {
        const Big& curr = table.polys[static_cast<std::size_t>(n)].coeffs;
        const Big& prev = table.polys[static_cast<std::size_t>(n) - 1].coeffs;
        const Big numerator = mul(curr, sub(mul(beta_minus_one, curr), prev));
        table.polys.push_back({div_exact(numerator, add(curr, prev))});
    }
    return table;
}

double evaluate(const BetaPolynomial& poly, double beta) {
    // exact rational Horner: a binary double converts to a rational without
    // loss, so the only rounding is the final cast back
    using Rational = boost::multiprecision::cpp_rational;
    Rational acc = 0;
    const Rational x(beta);
    for (std::size_t i = poly.coeffs.size(); i-- > 0;) {
        acc = acc * x + Rational(poly.coeffs[i]);
    }
    return acc.convert_to<double>();
}

}  // namespace ssr
