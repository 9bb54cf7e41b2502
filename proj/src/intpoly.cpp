#include "refcox/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace refcox {

IntPoly IntPoly::monomial(Int c, int k) {
    IntPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Int(0));
    p.coeffs_[static_cast<size_t>(k)] = std::move(c);
    return p;
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw input_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.normalize();
    return r;
}

IntPoly IntPoly::scale(const Int& c) const {
    IntPoly r;
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

IntPoly IntPoly::shift(int k) const {
    if (k < 0) throw input_error("shift by negative power");
    if (is_zero()) return {};
    IntPoly r;
    r.coeffs_.assign(static_cast<size_t>(k), Int(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * Int(static_cast<long>(i)));
    r.normalize();
    return r;
}

IntPoly IntPoly::compose_square() const {
    IntPoly r;
    if (is_zero()) return r;
    r.coeffs_.assign(2 * coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[2 * i] = coeffs_[i];
    return r;
}

Int IntPoly::eval(const Int& t) const {
    Int v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
    return v;
}

Rational IntPoly::eval(const Rational& t) const {
    // p(a/b) = (sum c_i a^i b^(n-i)) / b^n
    if (is_zero()) return Rational(Int(0));
    Int num = 0;
    Int apow = 1;
    std::vector<Int> bpow(coeffs_.size(), Int(1));
    for (size_t i = coeffs_.size() - 1; i > 0; --i) bpow[i - 1] = bpow[i] * t.den;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        num += coeffs_[i] * apow * bpow[i];
        apow *= t.num;
    }
    return Rational(num, bpow[0]);
}

double IntPoly::eval_double(double t) const {
    double v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + it->get_d();
    return v;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw input_error("division by the zero polynomial");
    if (is_zero()) return IntPoly{};
    if (deg() < d.deg()) return std::nullopt;
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<size_t>(deg() - d.deg()) + 1, Int(0));
    for (int k = deg() - d.deg(); k >= 0; --k) {
        Int& top = rem[static_cast<size_t>(k + d.deg())];
        if (top % d.leading() != 0) return std::nullopt;
        Int q = div_exact(top, d.leading());
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= d.deg(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * d.coeffs()[static_cast<size_t>(j)];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::divide_by_x_exact() const {
    if (is_zero()) return {};
    if (coeffs_[0] != 0) throw internal_error("division by x leaves a remainder");
    return IntPoly(std::vector<Int>(coeffs_.begin() + 1, coeffs_.end()));
}

bool IntPoly::reciprocal_check(int n) const {
    if (deg() > n) throw input_error("reciprocal_check: degree exceeds n");
    for (int i = 0; 2 * i <= n; ++i)
        if (coeff(i) != coeff(n - i)) return false;
    return true;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = gcd_int(g, abs(c));
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    IntPoly r(*this);
    if (g > 1)
        for (auto& c : r.coeffs_) c = div_exact(c, g);
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = deg(); k >= 0; --k) {
        const Int& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        std::string mag = Int(abs(c)).get_str();
        if (c > 0 && !out.empty()) out += "+";
        if (c < 0) out += "-";
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += (k == 1) ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& why) {
    throw input_error("cannot parse polynomial \"" + text + "\" at offset " +
                      std::to_string(pos) + ": " + why);
}

} // namespace

IntPoly IntPoly::parse(const std::string& text) {
    std::map<int, Int> terms;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) parse_fail(text, i, "empty input");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            parse_fail(text, i, "expected '+' or '-' between terms");
        }
        first = false;
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            if (digits.empty()) parse_fail(text, i, "'*' without a coefficient");
            ++i;
            skip_ws();
        }
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        int power = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string exp;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp += text[i++];
                if (exp.empty()) parse_fail(text, i, "'^' without an exponent");
                power = std::stoi(exp);
            }
        } else if (digits.empty()) {
            parse_fail(text, i, "expected a coefficient or 'x'");
        }
        terms[power] += sign * coeff;
        skip_ws();
    }
    std::vector<Int> coeffs;
    if (!terms.empty()) coeffs.assign(static_cast<size_t>(terms.rbegin()->first) + 1, Int(0));
    for (auto& [k, c] : terms) coeffs[static_cast<size_t>(k)] = c;
    return IntPoly(std::move(coeffs));
}

long totient(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::shared_mutex cyclo_mutex;
std::map<int, IntPoly> cyclo_cache;

} // namespace

IntPoly cyclotomic(int n) {
    if (n < 1) throw input_error("cyclotomic index must be positive");
    {
        std::shared_lock lock(cyclo_mutex);
        auto it = cyclo_cache.find(n);
        if (it != cyclo_cache.end()) return it->second;
    }
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<Int> xn(static_cast<size_t>(n) + 1, Int(0));
    xn[0] = -1;
    xn[static_cast<size_t>(n)] = 1;
    IntPoly p{std::vector<Int>(xn)};
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = p.divide_exact(cyclotomic(d));
        if (!q) throw internal_error("cyclotomic division failed");
        p = std::move(*q);
    }
    std::unique_lock lock(cyclo_mutex);
    return cyclo_cache.emplace(n, std::move(p)).first->second;
}

IntPoly interpolate(const std::vector<std::pair<Int, Int>>& points, int degree_bound) {
    if (static_cast<int>(points.size()) < degree_bound + 1)
        throw input_error("interpolate: need at least degree_bound+1 points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw input_error("interpolate: duplicate abscissa " + points[i].first.get_str());

    // Newton divided differences over exact rationals.
    const size_t m = points.size();
    std::vector<Rational> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = Rational(points[i].second);
    std::vector<Rational> newton_coeffs;
    newton_coeffs.push_back(dd[0]);
    for (size_t level = 1; level < m; ++level) {
        for (size_t i = 0; i + level < m; ++i) {
            Rational dx(points[i + level].first - points[i].first);
            dd[i] = (dd[i + 1] - dd[i]) / dx;
        }
        dd.resize(m - level);
        newton_coeffs.push_back(dd[0]);
    }

    // Expand the Newton form; coefficients stay rational until the end.
    std::vector<Rational> acc{Rational(Int(0))};
    std::vector<Rational> basis{Rational(Int(1))};  // prod (x - x_j)
    for (size_t k = 0; k < newton_coeffs.size(); ++k) {
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rational(Int(0)));
        for (size_t i = 0; i < basis.size(); ++i) acc[i] = acc[i] + newton_coeffs[k] * basis[i];
        if (k + 1 < newton_coeffs.size()) {
            // basis *= (x - x_k)
            std::vector<Rational> next(basis.size() + 1, Rational(Int(0)));
            Rational xk(points[k].first);
            for (size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] = next[i + 1] + basis[i];
                next[i] = next[i] - basis[i] * xk;
            }
            basis = std::move(next);
        }
    }
    while (acc.size() > 1 && acc.back().num == 0) acc.pop_back();
    if (static_cast<int>(acc.size()) - 1 > degree_bound)
        throw input_error("interpolate: data inconsistent with the degree bound");
    std::vector<Int> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& c : acc) {
        if (!c.is_integer())
            throw internal_error("interpolate: non-integer coefficient " + c.str());
        coeffs.push_back(c.num);
    }
    return IntPoly(std::move(coeffs));
}

IntPoly geometric_sum(int m) {
    if (m < 0) throw input_error("geometric_sum: negative length");
    return IntPoly(std::vector<Int>(static_cast<size_t>(m), Int(1)));
}

} // namespace refcox
