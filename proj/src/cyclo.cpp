#include "ddrep/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ddrep/errors.hpp"

namespace ddrep {

namespace {

struct FieldTables {
    int order = 1;
    int phi = 1;
    std::vector<long> cyclo;  // Phi_N, monic, degree phi
    // fold[k] = X^{phi+k} mod Phi_N for 0 <= k < phi - 1
    std::vector<std::vector<long>> fold;
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic
    const size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

std::vector<long> compute_cyclotomic(int n) {
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
    return p;
}

std::recursive_mutex g_tables_mu;
std::map<int, std::unique_ptr<FieldTables>> g_tables;

const FieldTables& tables(int n) {
    thread_local std::map<int, const FieldTables*> local;
    auto it = local.find(n);
    if (it != local.end()) return *it->second;
    std::lock_guard<std::recursive_mutex> lock(g_tables_mu);
    auto git = g_tables.find(n);
    if (git == g_tables.end()) {
        auto t = std::make_unique<FieldTables>();
        t->order = n;
        t->cyclo = compute_cyclotomic(n);
        t->phi = static_cast<int>(t->cyclo.size()) - 1;
        const int phi = t->phi;
        std::vector<long> cur(static_cast<size_t>(phi), 0);
        // X^phi = -(Phi_N - X^phi)
        for (int i = 0; i < phi; ++i) cur[static_cast<size_t>(i)] = -t->cyclo[static_cast<size_t>(i)];
        for (int k = 0; k + 1 < phi; ++k) {
            t->fold.push_back(cur);
            // multiply by X and reduce
            long top = cur[static_cast<size_t>(phi - 1)];
            for (int i = phi - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
            cur[0] = 0;
            for (int i = 0; i < phi; ++i) cur[static_cast<size_t>(i)] -= top * t->cyclo[static_cast<size_t>(i)];
        }
        git = g_tables.emplace(n, std::move(t)).first;
    }
    local[n] = git->second.get();
    return *git->second;
}

// Rational polynomial helpers for the extended gcd.
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_sub(const RPoly& a, const RPoly& b) {
    RPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void rp_divmod(const RPoly& a, const RPoly& b, RPoly& q, RPoly& r) {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        size_t shift = r.size() - b.size();
        Rational c = r.back() / lead;
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
    trim(q);
}

}  // namespace

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

int euler_phi(int n) {
    int r = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

const std::vector<long>& cyclotomic_poly(int n) { return tables(n).cyclo; }

CycScalar::CycScalar() : order_(1), c_(1) {}

CycScalar::CycScalar(long v) : order_(1), c_(1, Rational(v)) {}

CycScalar::CycScalar(const Rational& r, int order) : order_(order) {
    if (order < 1) throw ParameterError("cyclotomic order must be positive");
    c_.assign(static_cast<size_t>(tables(order).phi), Rational(0));
    c_[0] = r;
    c_[0].canonicalize();
}

void CycScalar::reduce_in_place(std::vector<Rational>& poly) const {
    const FieldTables& t = tables(order_);
    const size_t phi = static_cast<size_t>(t.phi);
    // X^N = 1 lets us fold very long inputs first.
    if (poly.size() > static_cast<size_t>(order_)) {
        for (size_t i = static_cast<size_t>(order_); i < poly.size(); ++i)
            poly[i % static_cast<size_t>(order_)] += poly[i];
        poly.resize(static_cast<size_t>(order_));
    }
    // Any remaining power X^k with phi <= k < N: reduce top-down by Phi_N.
    for (size_t i = poly.size(); i-- > phi;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        poly[i] = 0;
        for (size_t j = 0; j < phi; ++j)
            if (t.cyclo[j] != 0) poly[i - phi + j] -= c * t.cyclo[j];
    }
    poly.resize(phi);
}

CycScalar CycScalar::from_poly(int order, const std::vector<Rational>& poly) {
    CycScalar r(Rational(0), order);
    std::vector<Rational> p = poly;
    if (p.size() < r.c_.size()) p.resize(r.c_.size());
    r.reduce_in_place(p);
    for (auto& x : p) x.canonicalize();
    r.c_ = std::move(p);
    return r;
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

CycScalar CycScalar::coerce(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw ParameterError("cannot coerce to an order that is not a multiple");
    if (is_rational()) return CycScalar(c_[0], new_order);
    const int step = new_order / order_;
    std::vector<Rational> poly(static_cast<size_t>(step) * c_.size());
    for (size_t i = 0; i < c_.size(); ++i) poly[i * static_cast<size_t>(step)] = c_[i];
    return from_poly(new_order, poly);
}

namespace {

void align(CycScalar& a, CycScalar& b) {
    if (a.order() == b.order()) return;
    int l = lcm_int(a.order(), b.order());
    a = a.coerce(l);
    b = b.coerce(l);
}

}  // namespace

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& b) {
    if (order_ != b.order_) {
        CycScalar bb = b;
        align(*this, bb);
        return *this += bb;
    }
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(b.c_[i]) != 0) c_[i] += b.c_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& b) {
    if (order_ != b.order_) {
        CycScalar bb = b;
        align(*this, bb);
        return *this -= bb;
    }
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(b.c_[i]) != 0) c_[i] -= b.c_[i];
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& b) {
    if (order_ != b.order_) {
        CycScalar bb = b;
        align(*this, bb);
        return *this *= bb;
    }
    const size_t phi = c_.size();
    if (phi == 1) {
        c_[0] *= b.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * phi - 1);
    bool any = false;
    for (size_t i = 0; i < phi; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < phi; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            prod[i + j] += c_[i] * b.c_[j];
            any = true;
        }
    }
    if (!any) {
        for (auto& x : c_) x = 0;
        return *this;
    }
    const FieldTables& t = tables(order_);
    for (size_t k = phi; k < prod.size(); ++k) {
        if (sgn(prod[k]) == 0) continue;
        const auto& f = t.fold[k - phi];
        for (size_t i = 0; i < phi; ++i)
            if (f[i] != 0) prod[i] += prod[k] * f[i];
    }
    prod.resize(phi);
    c_ = std::move(prod);
    return *this;
}

void CycScalar::add_product(const CycScalar& b, const CycScalar& c) {
    if (b.order_ != order_ || c.order_ != order_ || c_.size() != 1) {
        *this += b * c;
        return;
    }
    if (sgn(b.c_[0]) == 0 || sgn(c.c_[0]) == 0) return;
    c_[0] += b.c_[0] * c.c_[0];
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (c_.size() == 1) {
        CycScalar r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Extended Euclid: find u with u * a = 1 mod Phi_N.
    const FieldTables& t = tables(order_);
    RPoly f(t.cyclo.begin(), t.cyclo.end());
    RPoly a(c_.begin(), c_.end());
    trim(a);
    RPoly r0 = f, r1 = a;
    RPoly s0, s1{Rational(1)};  // coefficients of a
    while (!(r1.size() == 1)) {
        if (r1.empty()) throw InternalInconsistency("cyclotomic polynomial is reducible?");
        RPoly q, r;
        rp_divmod(r0, r1, q, r);
        RPoly s = rp_sub(s0, rp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return from_poly(order_, s1);
}

CycScalar& CycScalar::operator/=(const CycScalar& b) { return *this *= b.inverse(); }

CycScalar CycScalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycScalar result(Rational(1), order_);
    CycScalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    CycScalar aa = a, bb = b;
    align(aa, bb);
    return aa.c_ == bb.c_;
}

std::string CycScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Rational v = c_[i];
        if (!first) {
            os << (sgn(v) < 0 ? " - " : " + ");
            v = abs(v);
        } else if (sgn(v) < 0 && i > 0) {
            os << "-";
            v = abs(v);
        }
        first = false;
        if (i == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycScalar root_of_unity(int n, long k) {
    if (n < 1) throw ParameterError("root_of_unity: order must be positive");
    long e = ((k % n) + n) % n;
    std::vector<Rational> poly(static_cast<size_t>(e) + 1);
    poly[static_cast<size_t>(e)] = 1;
    return CycScalar::from_poly(n, poly);
}

CycScalar q_number(int i, const CycScalar& q) {
    CycScalar sum(Rational(0), q.order());
    CycScalar p(Rational(1), q.order());
    for (int k = 0; k < i; ++k) {
        sum += p;
        p *= q;
    }
    return sum;
}

CycScalar q_factorial(int i, const CycScalar& q) {
    CycScalar r(Rational(1), q.order());
    for (int k = 1; k <= i; ++k) r *= q_number(k, q);
    return r;
}

}  // namespace ddrep
