#include "ddrep/datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ddrep {

namespace {

int mod(long a, long n) { return static_cast<int>(((a % n) + n) % n); }

void check_shape(const FinAbGroup& g, const std::vector<int>& v, const char* what) {
    if (v.size() != g.rank()) throw ParameterError(std::string(what) + ": length does not match the group rank");
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || v[i] >= g.orders[i])
            throw ParameterError(std::string(what) + ": entry out of range for its cyclic factor");
}

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

int FinAbGroup::exponent() const {
    int e = 1;
    for (int d : orders) e = lcm_int(e, d);
    return e;
}

long FinAbGroup::size() const {
    long s = 1;
    for (int d : orders) s *= d;
    return s;
}

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
    GroupElem r(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) r[i] = mod(static_cast<long>(a[i]) + b[i], orders[i]);
    return r;
}

GroupElem FinAbGroup::scale(const GroupElem& a, long k) const {
    GroupElem r(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) r[i] = mod(static_cast<long>(a[i]) * k, orders[i]);
    return r;
}

bool FinAbGroup::is_identity(const GroupElem& a) const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int FinAbGroup::element_order(const GroupElem& a) const {
    int o = 1;
    for (size_t i = 0; i < orders.size(); ++i) o = lcm_int(o, orders[i] / std::gcd(orders[i], a[i]));
    return o;
}

bool FinAbGroup::contains(const GroupElem& a) const {
    if (a.size() != orders.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= orders[i]) return false;
    return true;
}

std::vector<GroupElem> FinAbGroup::elements() const {
    std::vector<GroupElem> out;
    GroupElem e = identity();
    const long total = size();
    for (long k = 0; k < total; ++k) {
        out.push_back(e);
        for (size_t i = orders.size(); i-- > 0;) {
            if (++e[i] < orders[i]) break;
            e[i] = 0;
        }
    }
    return out;
}

int char_exp(const GroupDatum& D, const std::vector<int>& c, const GroupElem& e) {
    const int N = D.field_order;
    long s = 0;
    for (size_t i = 0; i < c.size(); ++i) s += static_cast<long>(c[i]) * e[i] * (N / D.group.orders[i]);
    return mod(s, N);
}

CycScalar char_value(const GroupDatum& D, const std::vector<int>& c, const GroupElem& e) {
    return root_of_unity(D.field_order, char_exp(D, c, e));
}

GroupDatum validate_datum(const FinAbGroup& g, const GroupChar& chi, const GroupElem& a, const CycScalar& alpha) {
    for (int d : g.orders)
        if (d < 1) throw ParameterError("cyclic factor orders must be positive");
    check_shape(g, chi.exps, "chi");
    check_shape(g, a, "a");
    GroupDatum D;
    D.group = g;
    D.chi = chi;
    D.a = a;
    D.field_order = lcm_int(g.exponent(), alpha.order());
    D.alpha = alpha.coerce(D.field_order);
    D.rho_exp = char_exp(D, chi.exps, a);
    D.rho = root_of_unity(D.field_order, D.rho_exp);
    D.n = D.field_order / std::gcd(D.field_order, D.rho_exp == 0 ? D.field_order : D.rho_exp);
    if (D.rho_exp == 0) D.n = 1;
    if (D.n < 2) throw ParameterError("chi(a) must be a nontrivial root of unity (n >= 2)");

    GroupElem an = g.scale(a, D.n);
    std::vector<int> chin(chi.exps.size());
    for (size_t i = 0; i < chin.size(); ++i) chin[i] = mod(static_cast<long>(chi.exps[i]) * D.n, g.orders[i]);
    const bool chi_n_trivial = std::all_of(chin.begin(), chin.end(), [](int x) { return x == 0; });
    const bool x_power_nonzero = !D.alpha.is_zero() && !g.is_identity(an);

    if (x_power_nonzero && !chi_n_trivial)
        throw DatumError("group datum axiom violated: chi^n = (" + vec_str(chin) + ") is nontrivial and alpha(a^n - 1) != 0 with a^n = (" +
                             vec_str(an) + ")",
                         chin, an);
    const int ord_a = g.element_order(a);
    if (x_power_nonzero) {
        D.kind = Kind::NonNilpotent;
        D.alpha = CycScalar(Rational(1), D.field_order);
        D.m = ord_a / D.n;
        if (D.m <= 1) throw InternalInconsistency("non-nilpotent datum with m = 1");
    } else {
        D.kind = Kind::Nilpotent;
        D.m = lcm_int(ord_a, g.element_order(chi.exps)) / D.n;
    }
    if (weight_order(D, phi(D)) != D.m * D.n) throw InternalInconsistency("order of phi differs from mn");
    return D;
}

Weight trivial_weight(const GroupDatum& D) { return Weight{D.group.identity(), D.group.identity()}; }

Weight phi(const GroupDatum& D) {
    Weight w;
    w.gpart = D.group.scale(D.chi.exps, -1);
    w.h = D.a;
    return w;
}

Weight weight_mul(const GroupDatum& D, const Weight& u, const Weight& v) {
    return Weight{D.group.add(u.gpart, v.gpart), D.group.add(u.h, v.h)};
}

Weight weight_pow(const GroupDatum& D, const Weight& u, long k) {
    return Weight{D.group.scale(u.gpart, k), D.group.scale(u.h, k)};
}

int weight_order(const GroupDatum& D, const Weight& u) {
    return lcm_int(D.group.element_order(u.gpart), D.group.element_order(u.h));
}

int weight_at_a_exp(const GroupDatum& D, const Weight& w) { return char_exp(D, w.gpart, D.a); }
int weight_at_chi_exp(const GroupDatum& D, const Weight& w) { return char_exp(D, D.chi.exps, w.h); }
CycScalar weight_at_a(const GroupDatum& D, const Weight& w) { return root_of_unity(D.field_order, weight_at_a_exp(D, w)); }
CycScalar weight_at_chi(const GroupDatum& D, const Weight& w) {
    return root_of_unity(D.field_order, weight_at_chi_exp(D, w));
}

WeightClass classify_weight(const GroupDatum& D, const Weight& w) {
    const int N = D.field_order;
    const int v = mod(weight_at_a_exp(D, w) - weight_at_chi_exp(D, w), N);
    WeightClass c;
    c.weight = w;
    for (int s = 0; s <= D.n - 2; ++s) {
        if (mod(static_cast<long>(s) * D.rho_exp, N) == v) {
            c.d = s;
            c.l = s + 1;
            return c;
        }
    }
    c.d = -1;
    c.l = D.n;
    c.sub = mod(static_cast<long>(D.n - 1) * D.rho_exp, N) == v ? TopSubclass::DoublePrime : TopSubclass::Prime;
    return c;
}

bool in_exceptional(const GroupDatum& D, const Weight& w) { return classify_weight(D, w).d >= 0; }

Weight sigma(const GroupDatum& D, const Weight& w) {
    WeightClass c = classify_weight(D, w);
    Weight r = weight_mul(D, w, weight_pow(D, phi(D), c.d + 1));
    if (c.d >= 0 && classify_weight(D, r).l != D.n - c.l)
        throw InternalInconsistency("sigma(lambda) left I_{n-l}");
    return r;
}

Weight sigma_inv(const GroupDatum& D, const Weight& w) {
    WeightClass c = classify_weight(D, w);
    Weight r = weight_mul(D, w, weight_pow(D, phi(D), c.l - D.n));
    if (c.d >= 0 && classify_weight(D, r).l != D.n - c.l)
        throw InternalInconsistency("sigma^{-1}(lambda) left I_{n-l}");
    return r;
}

Weight tau(const GroupDatum& D, const Weight& w, long k) {
    Weight r = w;
    for (long i = 0; i < k; ++i) r = sigma(D, sigma(D, r));
    for (long i = 0; i < -k; ++i) r = sigma_inv(D, sigma_inv(D, r));
    return r;
}

Weight tau_orbit_rep(const GroupDatum& D, const Weight& w) {
    Weight best = w, cur = w;
    for (int k = 1; k < D.m; ++k) {
        cur = tau(D, cur);
        if (cur < best) best = cur;
    }
    return best;
}

std::vector<WeightClass> enumerate_weights(const GroupDatum& D) {
    std::vector<WeightClass> out;
    const auto elems = D.group.elements();
    for (const auto& gp : elems)
        for (const auto& h : elems) out.push_back(classify_weight(D, Weight{gp, h}));
    return out;
}

std::vector<Weight> kernel_K(const GroupDatum& D) {
    std::vector<Weight> out;
    for (const auto& c : enumerate_weights(D))
        if (weight_at_a_exp(D, c.weight) == weight_at_chi_exp(D, c.weight)) out.push_back(c.weight);
    return out;
}

std::map<int, long> simple_counts(const GroupDatum& D) {
    std::map<int, long> counts;
    for (int d = 1; d <= D.n; ++d) counts[d] = 0;
    for (const auto& c : enumerate_weights(D)) counts[c.l]++;
    const long K = static_cast<long>(kernel_K(D).size());
    const long G2 = D.group.size() * D.group.size();
    for (int d = 1; d < D.n; ++d)
        if (counts[d] != K) throw InternalInconsistency("count of simples of dimension < n differs from |K|");
    if (counts[D.n] != G2 - (D.n - 1) * K) throw InternalInconsistency("count of n-dimensional simples is off");
    return counts;
}

std::vector<std::vector<SimpleLabel>> linkage_blocks(const GroupDatum& D) {
    std::vector<std::vector<SimpleLabel>> blocks;
    std::set<SimpleLabel> seen;
    for (const auto& c : enumerate_weights(D)) {
        SimpleLabel s{c.l, c.weight};
        if (seen.count(s)) continue;
        if (c.l == D.n) {
            blocks.push_back({s});
            seen.insert(s);
            continue;
        }
        std::set<SimpleLabel> block;
        Weight w = c.weight;
        Weight sw = sigma(D, c.weight);
        for (int k = 0; k < D.m; ++k) {
            block.insert(SimpleLabel{c.l, w});
            block.insert(SimpleLabel{D.n - c.l, sw});
            w = tau(D, w);
            sw = tau(D, sw);
        }
        if (static_cast<int>(block.size()) != 2 * D.m) throw InternalInconsistency("linkage block does not have 2m members");
        seen.insert(block.begin(), block.end());
        blocks.emplace_back(block.begin(), block.end());
    }
    return blocks;
}

CycScalar alpha_raw(const GroupDatum& D, int i, const Weight& w) {
    const int N = D.field_order;
    CycScalar t = weight_at_chi(D, w) - root_of_unity(N, static_cast<long>(weight_at_a_exp(D, w)) + static_cast<long>(1 - i) * D.rho_exp);
    return q_number(i, D.rho) * t;
}

CycScalar alpha_coeff(const GroupDatum& D, int i, int l, const Weight& w) {
    if (i < 1) throw ParameterError("alpha_i needs i >= 1");
    if (l < 1 || l > D.n || classify_weight(D, w).l != l) throw ParameterError("alpha_i(l, lambda): lambda is not in I_l");
    CycScalar v = alpha_raw(D, i, w);
    if (i <= l - 1 && v.is_zero()) throw InternalInconsistency("alpha_i(l, lambda) vanished for i < l");
    if (l < D.n && alpha_raw(D, i, tau(D, w)) != v) throw InternalInconsistency("alpha_i is not tau-invariant");
    return v;
}

CycScalar beta_coeff(const GroupDatum& D, int l, const Weight& w) {
    if (l < 1 || l > D.n || classify_weight(D, w).l != l) throw ParameterError("beta(l, lambda): lambda is not in I_l");
    CycScalar b(Rational(1), D.field_order);
    for (int i = 1; i <= l - 1; ++i) b *= alpha_coeff(D, i, l, w);
    return b;
}

namespace {

CycScalar z_formula(const GroupDatum& D, const Weight& w) {
    const int N = D.field_order;
    CycScalar num = root_of_unity(N, static_cast<long>(weight_at_a_exp(D, w)) + D.rho_exp) - weight_at_chi(D, w);
    return num / q_factorial(D.n - 1, D.rho);
}

}  // namespace

YZ yz_coeff(const GroupDatum& D, int l, const Weight& w) {
    if (D.kind != Kind::NonNilpotent) throw UnsupportedOperation("y/z coefficients exist only for non-nilpotent data");
    if (l < 1 || l > D.n - 1 || classify_weight(D, w).l != l) throw ParameterError("y/z: lambda is not in I_l with l <= n-1");
    const int N = D.field_order;
    const long ae = weight_at_a_exp(D, w), ce = weight_at_chi_exp(D, w);
    CycScalar num = root_of_unity(N, ae + static_cast<long>(1 - l) * D.rho_exp) - root_of_unity(N, ce + static_cast<long>(l) * D.rho_exp);
    YZ r{num / q_factorial(D.n - 1, D.rho), z_formula(D, w)};
    if (!(r.y + r.z).is_zero()) throw InternalInconsistency("y + z != 0");
    if (z_formula(D, sigma_inv(D, w)) != r.y) throw InternalInconsistency("z_{n-l, sigma^{-1} lambda} != y_{l, lambda}");
    return r;
}

std::string weight_to_string(const Weight& w) {
    return "(" + vec_str(w.gpart) + "|" + vec_str(w.h) + ")";
}

std::string kind_name(Kind k) { return k == Kind::Nilpotent ? "nilpotent" : "non-nilpotent"; }

}  // namespace ddrep
