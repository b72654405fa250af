#include "gi/scalars.hpp"

#include "gi/errors.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace gi {
namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

// Quotient and remainder of p by a nonzero d.
std::pair<Poly, Poly> divmod(Poly p, const Poly& d) {
    trim(p);
    if (p.size() < d.size())
        return {Poly{}, p};
    Poly q(p.size() - d.size() + 1);
    const Rational& lead = d.back();
    for (size_t k = q.size(); k-- > 0;) {
        Rational c = p[k + d.size() - 1] / lead;
        q[k] = c;
        if (sgn(c) == 0)
            continue;
        for (size_t i = 0; i < d.size(); ++i)
            p[k + i] -= c * d[i];
    }
    trim(p);
    trim(q);
    return {q, p};
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

// Reduction data for Q(zeta_N): powers[j] is x^j mod Phi_N for 0 <= j < N.
struct Field {
    int n = 1;
    int degree = 1;
    Poly phi;
    std::vector<Poly> powers;
};

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, std::unique_ptr<const Field>>& cache() {
    static std::map<int, std::unique_ptr<const Field>> c;
    return c;
}

const Field& field_locked(int n);

Poly compute_cyclotomic(int n) {
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    Poly num(static_cast<size_t>(n) + 1);
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto [q, r] = divmod(num, field_locked(d).phi);
        if (!r.empty())
            throw InternalError("cyclotomic division left a remainder");
        num = std::move(q);
    }
    return num;
}

const Field& field_locked(int n) {
    auto& c = cache();
    if (auto it = c.find(n); it != c.end())
        return *it->second;
    auto f = std::make_unique<Field>();
    f->n = n;
    f->phi = compute_cyclotomic(n);
    f->degree = static_cast<int>(f->phi.size()) - 1;
    const auto deg = static_cast<size_t>(f->degree);
    f->powers.resize(static_cast<size_t>(n));
    for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
        Poly p(deg);
        if (j < deg) {
            p[j] = 1;
        } else {
            // x * x^(j-1), then fold the x^deg term with the monic Phi_N
            const Poly& prev = f->powers[j - 1];
            Rational top = prev[deg - 1];
            for (size_t k = deg - 1; k > 0; --k)
                p[k] = prev[k - 1];
            p[0] = 0;
            if (sgn(top) != 0) {
                for (size_t k = 0; k < deg; ++k)
                    p[k] -= top * f->phi[k];
            }
        }
        f->powers[j] = std::move(p);
    }
    const Field& ref = *f;
    c.emplace(n, std::move(f));
    return ref;
}

const Field& field(int n) {
    std::lock_guard lock(cache_mutex());
    return field_locked(n);
}

// Folds an exponent-indexed accumulator (length N, exponents mod N) into the
// power basis of Q(zeta_N).
std::vector<Rational> reduce(const Field& f, const std::vector<Rational>& acc) {
    std::vector<Rational> out(static_cast<size_t>(f.degree));
    for (size_t j = 0; j < acc.size(); ++j) {
        if (sgn(acc[j]) == 0)
            continue;
        const Poly& p = f.powers[j];
        if (j < out.size()) {
            out[j] += acc[j];
            continue;
        }
        for (size_t k = 0; k < out.size(); ++k) {
            if (sgn(p[k]) != 0)
                out[k] += acc[j] * p[k];
        }
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw ParseError("empty rational");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("malformed rational '" + s + "'");
    if (s.find('/') != std::string::npos && sgn(r.get_den()) == 0)
        throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace

int euler_phi(int n) {
    if (n < 1)
        throw InvalidArgument("euler_phi needs n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        while (m % p == 0)
            m /= p;
        result -= result / p;
    }
    if (m > 1)
        result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    if (n < 1)
        throw InvalidArgument("cyclotomic polynomial needs n >= 1");
    return field(n).phi;
}

CycloScalar::CycloScalar() = default;
CycloScalar::CycloScalar(int value) {
    if (value != 0)
        coeffs_.emplace_back(value);
}
CycloScalar::CycloScalar(long value) {
    if (value != 0)
        coeffs_.emplace_back(value);
}
CycloScalar::CycloScalar(Rational value) {
    if (sgn(value) != 0) {
        value.canonicalize();
        coeffs_.push_back(std::move(value));
    }
}

CycloScalar::CycloScalar(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    normalize();
}

CycloScalar CycloScalar::from_polynomial(int conductor, std::span<const Rational> coeffs) {
    if (conductor < 1)
        throw InvalidArgument("conductor must be >= 1");
    const Field& f = field(conductor);
    std::vector<Rational> acc(static_cast<size_t>(conductor));
    for (size_t k = 0; k < coeffs.size(); ++k) {
        // mpq arithmetic requires canonical operands
        Rational c = coeffs[k];
        c.canonicalize();
        acc[k % acc.size()] += c;
    }
    return CycloScalar(conductor, reduce(f, acc));
}

namespace {
const Rational kZero;
} // namespace

std::span<const Rational> CycloScalar::coefficients() const {
    if (coeffs_.empty())
        return {&kZero, 1};
    return coeffs_;
}

const Rational& CycloScalar::rational_value() const {
    return coeffs_.empty() ? kZero : coeffs_[0];
}

void CycloScalar::normalize() {
    if (conductor_ != 1) {
        for (size_t k = 1; k < coeffs_.size(); ++k) {
            if (sgn(coeffs_[k]) != 0)
                return;
        }
        coeffs_.resize(1);
        conductor_ = 1;
    }
    if (coeffs_.size() == 1 && sgn(coeffs_[0]) == 0)
        coeffs_.clear();
}

bool CycloScalar::is_zero() const {
    // normalized: a zero is always rational and stored without coefficients
    return conductor_ == 1 && coeffs_.empty();
}

bool CycloScalar::is_one() const {
    return conductor_ == 1 && !coeffs_.empty() && coeffs_[0] == 1;
}

CycloScalar CycloScalar::promoted(int n) const {
    if (n < 1 || n % conductor_ != 0)
        throw InvalidArgument("cannot promote conductor " + std::to_string(conductor_) +
                              " to " + std::to_string(n));
    if (n == conductor_) {
        CycloScalar copy = *this;
        return copy;
    }
    const Field& f = field(n);
    std::vector<Rational> acc(static_cast<size_t>(n));
    const size_t stride = static_cast<size_t>(n / conductor_);
    for (size_t k = 0; k < coeffs_.size(); ++k)
        acc[k * stride] = coeffs_[k];
    CycloScalar out;
    out.conductor_ = n;
    out.coeffs_ = reduce(f, acc);
    // left unnormalized so coefficient vectors line up at conductor n
    return out;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
    if (rhs.conductor_ == 1) {
        if (rhs.coeffs_.empty())
            return *this;
        if (coeffs_.empty())
            return *this = rhs;
        coeffs_[0] += rhs.coeffs_[0];
        if (conductor_ == 1)
            normalize();
        return *this;
    }
    if (conductor_ != rhs.conductor_) {
        const int n = std::lcm(conductor_, rhs.conductor_);
        *this = promoted(n);
        if (rhs.conductor_ != n) {
            CycloScalar r = rhs.promoted(n);
            for (size_t k = 0; k < coeffs_.size(); ++k)
                coeffs_[k] += r.coeffs_[k];
            normalize();
            return *this;
        }
    }
    for (size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) {
    return *this += -rhs;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    if (a.conductor_ == 1 || b.conductor_ == 1) {
        const CycloScalar& scalar = a.conductor_ == 1 ? a : b;
        const CycloScalar& other = a.conductor_ == 1 ? b : a;
        if (scalar.coeffs_.empty())
            return CycloScalar();
        CycloScalar out = other;
        for (auto& c : out.coeffs_)
            c *= scalar.coeffs_[0];
        return out;
    }
    const int n = std::lcm(a.conductor_, b.conductor_);
    const CycloScalar pa = a.conductor_ == n ? a : a.promoted(n);
    const CycloScalar pb = b.conductor_ == n ? b : b.promoted(n);
    const Field& f = field(n);
    std::vector<Rational> acc(static_cast<size_t>(n));
    for (size_t i = 0; i < pa.coeffs_.size(); ++i) {
        if (sgn(pa.coeffs_[i]) == 0)
            continue;
        for (size_t j = 0; j < pb.coeffs_.size(); ++j) {
            if (sgn(pb.coeffs_[j]) == 0)
                continue;
            acc[(i + j) % acc.size()] += pa.coeffs_[i] * pb.coeffs_[j];
        }
    }
    return CycloScalar(n, reduce(f, acc));
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& rhs) {
    *this = *this * rhs.inv();
    return *this;
}

CycloScalar CycloScalar::inv() const {
    if (is_zero())
        throw DivisionByZero();
    if (conductor_ == 1)
        return CycloScalar(Rational(1) / coeffs_[0]);
    // extended Euclid in Q[x]: s * a + t * Phi_N = gcd (a nonzero constant)
    const Field& f = field(conductor_);
    Poly r0 = f.phi;
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw InternalError("element shares a factor with the cyclotomic polynomial");
    for (auto& c : s0)
        c /= r0[0];
    return from_polynomial(conductor_, s0);
}

CycloScalar CycloScalar::pow(long exponent) const {
    CycloScalar base = exponent < 0 ? inv() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    CycloScalar result(1);
    while (e > 0) {
        if (e & 1UL)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.conductor_ == b.conductor_)
        return a.coeffs_ == b.coeffs_;
    if (a.conductor_ == 1 || b.conductor_ == 1)
        return false; // normalized: a non-rational element never equals a rational
    const int n = std::lcm(a.conductor_, b.conductor_);
    return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

std::string CycloScalar::to_string() const {
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += coeffs_[k].get_str();
        if (k == 1)
            out += "*z";
        else if (k > 1)
            out += "*z^" + std::to_string(k);
    }
    if (out.empty())
        out = "0";
    if (conductor_ > 1)
        out += "@" + std::to_string(conductor_);
    return out;
}

CycloScalar CycloScalar::parse(std::string_view text) {
    int conductor = 1;
    std::string_view body = text;
    if (auto at = text.find('@'); at != std::string_view::npos) {
        std::string tail(text.substr(at + 1));
        size_t used = 0;
        try {
            conductor = std::stoi(tail, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed conductor in '" + std::string(text) + "'");
        }
        for (size_t i = used; i < tail.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(tail[i])))
                throw ParseError("trailing characters after conductor in '" + std::string(text) + "'");
        }
        if (conductor < 1)
            throw ParseError("conductor must be >= 1");
        body = text.substr(0, at);
    }

    std::vector<Rational> coeffs;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    bool any_term = false;
    skip_ws();
    while (pos < body.size()) {
        int sign = 1;
        bool saw_sign = false;
        while (pos < body.size() && (body[pos] == '+' || body[pos] == '-' || std::isspace(static_cast<unsigned char>(body[pos])))) {
            if (body[pos] == '-')
                sign = -sign;
            if (body[pos] == '+' || body[pos] == '-')
                saw_sign = true;
            ++pos;
        }
        if (any_term && !saw_sign)
            fail("expected '+' or '-'");
        if (pos >= body.size())
            fail("dangling sign");
        Rational coeff(1);
        bool has_coeff = false;
        size_t start = pos;
        while (pos < body.size() && (std::isdigit(static_cast<unsigned char>(body[pos])) || body[pos] == '/'))
            ++pos;
        if (pos > start) {
            coeff = parse_rational(body.substr(start, pos - start));
            has_coeff = true;
        }
        skip_ws();
        size_t exponent = 0;
        if (pos < body.size() && body[pos] == '*') {
            if (!has_coeff)
                fail("'*' without coefficient");
            ++pos;
            skip_ws();
            if (pos >= body.size() || body[pos] != 'z')
                fail("expected 'z' after '*'");
        }
        if (pos < body.size() && body[pos] == 'z') {
            ++pos;
            exponent = 1;
            if (pos < body.size() && body[pos] == '^') {
                ++pos;
                size_t e0 = pos;
                while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
                    ++pos;
                if (pos == e0)
                    fail("expected exponent");
                exponent = std::stoul(std::string(body.substr(e0, pos - e0)));
            }
        } else if (!has_coeff) {
            fail("expected a term");
        }
        if (exponent > 0 && conductor == 1 && text.find('@') == std::string_view::npos)
            fail("power of z without conductor annotation");
        if (coeffs.size() <= exponent)
            coeffs.resize(exponent + 1);
        coeffs[exponent] += sign * coeff;
        any_term = true;
        skip_ws();
    }
    if (!any_term)
        throw ParseError("empty scalar '" + std::string(text) + "'");
    return from_polynomial(conductor, coeffs);
}

CycloScalar zeta(int n) {
    if (n < 1)
        throw InvalidArgument("zeta needs N >= 1");
    if (n == 1)
        return CycloScalar(1);
    if (n == 2)
        return CycloScalar(-1);
    std::vector<Rational> c(2);
    c[1] = 1;
    return CycloScalar::from_polynomial(n, c);
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& x) {
    return os << x.to_string();
}

} // namespace gi
