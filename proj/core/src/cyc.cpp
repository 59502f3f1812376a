#include "eqc/cyc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace eqc {

namespace {

// Exact division of integer polynomials, constant term first. num must be
// divisible by den; den must be monic up to sign.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Integer> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
    const Integer& lead = den.back();
    for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
        Integer coef = num[i] / lead;
        q[i - (den.size() - 1)] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= coef * den[j];
    }
    for (const Integer& r : num)
        if (r != 0) throw InvalidInput("non-exact polynomial division");
    return q;
}

std::vector<int> divisors_of(int m) {
    std::vector<int> ds;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) ds.push_back(d);
    return ds;
}

}  // namespace

const std::vector<Integer>& cyclotomic_poly(int m) {
    if (m < 1) throw InvalidInput("conductor must be positive");
    static std::map<int, std::vector<Integer>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed ascending.
    std::vector<Integer> num(m + 1, Integer(0));
    num[0] = -1;
    num[m] = 1;
    for (int d : divisors_of(m)) {
        if (d == m) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_poly(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
}

void Cyc::reduce_(std::vector<Rational> raw) {
    const std::vector<Integer>& phi = cyclotomic_poly(m_);
    const std::size_t deg = phi.size() - 1;
    // Monic remainder: fold exponents >= deg down by subtracting multiples.
    for (std::size_t i = raw.size(); i-- > deg;) {
        Rational coef = raw[i];
        if (coef == 0) continue;
        raw[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= coef * Rational(phi[j]);
    }
    c_.assign(static_cast<std::size_t>(m_), Rational(0));
    for (std::size_t i = 0; i < raw.size() && i < static_cast<std::size_t>(m_); ++i) c_[i] = raw[i];
}

Cyc::Cyc(int m, std::vector<Rational> raw) : m_(m) {
    if (m < 1) throw InvalidInput("conductor must be positive");
    reduce_(std::move(raw));
}

Cyc Cyc::zeta(int m, long k) {
    if (m < 1) throw InvalidInput("conductor must be positive");
    long r = k % m;
    if (r < 0) r += m;
    std::vector<Rational> raw(static_cast<std::size_t>(m) + 1, Rational(0));
    raw[static_cast<std::size_t>(r)] = 1;
    return Cyc(m, std::move(raw));
}

bool Cyc::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyc::as_rational() const {
    if (!is_rational()) throw NotRational("value is not in Q: " + str());
    return c_[0];
}

Cyc Cyc::rescaled(int M) const {
    if (M < 1 || M % m_ != 0) throw InvalidInput("rescale target must be a conductor multiple");
    if (M == m_) return *this;
    const int s = M / m_;
    std::vector<Rational> raw(static_cast<std::size_t>(M), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i * s] = c_[i];
    return Cyc(M, std::move(raw));
}

Cyc Cyc::conj() const {
    std::vector<Rational> raw(static_cast<std::size_t>(m_), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) raw[(m_ - i) % m_] += c_[i];
    return Cyc(m_, std::move(raw));
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rational& q : r.c_) q = -q;
    return r;
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyc& Cyc::operator+=(const Cyc& o) {
    const int M = lcm_int(m_, o.m_);
    Cyc a = rescaled(M);
    Cyc b = o.rescaled(M);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return *this = std::move(a);
}

Cyc& Cyc::operator-=(const Cyc& o) {
    const int M = lcm_int(m_, o.m_);
    Cyc a = rescaled(M);
    Cyc b = o.rescaled(M);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return *this = std::move(a);
}

Cyc& Cyc::operator*=(const Cyc& o) {
    const int M = lcm_int(m_, o.m_);
    Cyc a = rescaled(M);
    Cyc b = o.rescaled(M);
    std::vector<Rational> raw(2 * static_cast<std::size_t>(M), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    a.reduce_(std::move(raw));
    return *this = std::move(a);
}

Cyc& Cyc::operator*=(const Rational& q) {
    for (Rational& c : c_) c *= q;
    return *this;
}

bool operator==(const Cyc& a, const Cyc& b) { return Cyc::compare(a, b) == 0; }

int Cyc::compare(const Cyc& a, const Cyc& b) {
    const int M = lcm_int(a.m_, b.m_);
    const Cyc ar = a.rescaled(M);
    const Cyc br = b.rescaled(M);
    for (std::size_t i = 0; i < ar.c_.size(); ++i) {
        const int c = cmp(ar.c_[i], br.c_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Cyc::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational q = c_[i];
        if (first) {
            if (q < 0) {
                out << "-";
                q = -q;
            }
        } else {
            out << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        const bool unit_coef = (q == 1) && i > 0;
        if (!unit_coef) out << to_string(q);
        if (i > 0) {
            if (!unit_coef) out << "*";
            out << "z" << m_;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace eqc
