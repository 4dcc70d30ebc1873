#include "tiltwall/sturm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tiltwall {

namespace {

Poly squarefree(const Poly& p) {
    Poly g = gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return divmod(p, g).quot;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

class Isolator {
public:
    explicit Isolator(const Poly& p) : q_(squarefree(p)), chain_(sturm_chain(q_)) {}

    int variations(const Rat& x) const {
        std::vector<int> s;
        s.reserve(chain_.size());
        for (const Poly& f : chain_) s.push_back(f.sign_at(x));
        return sign_changes(s);
    }

    // Roots strictly between non-roots l < h.
    int count(const Rat& l, const Rat& h) const { return variations(l) - variations(h); }

    bool is_root(const Rat& x) const { return q_.sign_at(x) == 0; }

    // All real roots, as disjoint brackets with non-root ends (exact roots keep guards).
    struct Bracket {
        Rat lo, hi;
        std::optional<Rat> exact;
    };

    std::vector<Bracket> isolate_all() const {
        std::vector<Bracket> out;
        if (q_.degree() <= 0) return out;
        Rat bound(1);
        for (int i = 0; i < q_.degree(); ++i) bound = max(bound, (q_.coeff(i) / q_.leading()).abs() + Rat(1));
        bound += Rat(1);

        std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
        while (!stack.empty()) {
            auto [l, h] = stack.back();
            stack.pop_back();
            int n = count(l, h);
            if (n == 0) continue;
            if (n == 1) {
                out.push_back({l, h, std::nullopt});
                continue;
            }
            Rat mid = (l + h) / Rat(2);
            if (is_root(mid)) {
                Rat delta = (h - l) / Rat(4);
                while (true) {
                    Rat a = mid - delta, b = mid + delta;
                    if (!is_root(a) && !is_root(b) && count(a, b) == 1) break;
                    delta /= Rat(2);
                }
                out.push_back({mid - delta, mid + delta, mid});
                stack.push_back({l, mid - delta});
                stack.push_back({mid + delta, h});
            } else {
                stack.push_back({l, mid});
                stack.push_back({mid, h});
            }
        }
        std::sort(out.begin(), out.end(), [](const Bracket& x, const Bracket& y) { return x.lo < y.lo; });
        return out;
    }

    // Position of the bracketed root relative to e; may tighten the bracket.
    int compare(Bracket& b, const Rat& e) const {
        if (b.exact) return (*b.exact < e) ? -1 : (*b.exact > e) ? 1 : 0;
        if (e <= b.lo) return 1;
        if (e >= b.hi) return -1;
        if (is_root(e)) {
            b.exact = e;
            return 0;
        }
        if (count(b.lo, e) == 1) {
            b.hi = e;
            return -1;
        }
        b.lo = e;
        return 1;
    }

    const Poly& squarefree_part() const { return q_; }

private:
    Poly q_;
    std::vector<Poly> chain_;
};

}  // namespace

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly q = squarefree(p);
    if (q.is_zero()) return chain;
    chain.push_back(q);
    Poly d = q.derivative();
    while (!d.is_zero()) {
        chain.push_back(d);
        Poly r = -divmod(chain[chain.size() - 2], chain.back()).rem;
        d = r;
    }
    return chain;
}

bool Interval::contains(const Rat& x) const {
    if (lo && (x < *lo || (x == *lo && !lo_closed))) return false;
    if (hi && (x > *hi || (x == *hi && !hi_closed))) return false;
    return true;
}

std::string Interval::str() const {
    std::ostringstream os;
    os << (lo && lo_closed ? "[" : "(") << (lo ? lo->str() : "-inf") << ", "
       << (hi ? hi->str() : "+inf") << (hi && hi_closed ? "]" : ")");
    return os.str();
}

const char* to_string(SignClass s) {
    switch (s) {
        case SignClass::StrictlyPositive: return "StrictlyPositive";
        case SignClass::StrictlyNegative: return "StrictlyNegative";
        case SignClass::NonNegativeWithRoots: return "NonNegativeWithRoots";
        case SignClass::NonPositiveWithRoots: return "NonPositiveWithRoots";
        case SignClass::Mixed: return "Mixed";
        case SignClass::IdenticallyZero: return "IdenticallyZero";
    }
    return "?";
}

std::optional<SignClass> sign_class_from_string(const std::string& s) {
    for (SignClass c : {SignClass::StrictlyPositive, SignClass::StrictlyNegative, SignClass::NonNegativeWithRoots,
                        SignClass::NonPositiveWithRoots, SignClass::Mixed, SignClass::IdenticallyZero})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

SignReport sturm_sign(const Poly& p, const Interval& iv) {
    if (iv.lo && iv.hi && (*iv.lo > *iv.hi || (*iv.lo == *iv.hi && !(iv.lo_closed && iv.hi_closed))))
        throw std::domain_error("empty interval " + iv.str());
    if (p.is_zero()) return {SignClass::IdenticallyZero, {}};

    if (iv.is_point()) {
        int s = p.sign_at(*iv.lo);
        if (s > 0) return {SignClass::StrictlyPositive, {}};
        if (s < 0) return {SignClass::StrictlyNegative, {}};
        return {SignClass::NonNegativeWithRoots, {{*iv.lo, *iv.lo}}};
    }

    Isolator iso(p);
    auto brackets = iso.isolate_all();

    // Relation of each root to the interval ends: -1 below, 0 on, +1 above.
    std::vector<int> vs_lo(brackets.size(), 1), vs_hi(brackets.size(), -1);
    for (std::size_t i = 0; i < brackets.size(); ++i) {
        if (iv.lo) vs_lo[i] = iso.compare(brackets[i], *iv.lo);
        if (iv.hi) vs_hi[i] = iso.compare(brackets[i], *iv.hi);
    }

    SignReport out{SignClass::Mixed, {}};
    for (std::size_t i = 0; i < brackets.size(); ++i) {
        bool above_lo = vs_lo[i] > 0 || (vs_lo[i] == 0 && iv.lo_closed);
        bool below_hi = vs_hi[i] < 0 || (vs_hi[i] == 0 && iv.hi_closed);
        if (above_lo && below_hi) {
            const auto& b = brackets[i];
            if (b.exact) out.roots.push_back({*b.exact, *b.exact});
            else out.roots.push_back({b.lo, b.hi});
        }
    }

    // Sign on each open gap between consecutive roots that meets the interval.
    bool pos = false, neg = false;
    const std::size_t n = brackets.size();
    for (std::size_t g = 0; g <= n; ++g) {
        // gap (root g-1, root g)
        bool left_ok = g == 0 || vs_hi[g - 1] < 0;
        bool right_ok = g == n || vs_lo[g] > 0;
        if (!left_ok || !right_ok) continue;
        Rat sample;
        if (n == 0) sample = Rat(0);
        else if (g == 0) sample = brackets[0].lo;
        else sample = brackets[g - 1].hi;
        int s = p.sign_at(sample);
        if (s > 0) pos = true;
        else if (s < 0) neg = true;
        else throw std::logic_error("sturm: gap sample landed on a root");
    }

    if (pos && neg) out.kind = SignClass::Mixed;
    else if (pos) out.kind = out.roots.empty() ? SignClass::StrictlyPositive : SignClass::NonNegativeWithRoots;
    else if (neg) out.kind = out.roots.empty() ? SignClass::StrictlyNegative : SignClass::NonPositiveWithRoots;
    else throw std::logic_error("sturm: no gap meets a non-degenerate interval");
    return out;
}

std::size_t count_roots(const Poly& p, const Interval& iv) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
    return sturm_sign(p, iv).roots.size();
}

}  // namespace tiltwall
