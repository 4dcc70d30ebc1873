#include "tiltwall/wallsearch.hpp"

#include "candidates.hpp"
#include "tiltwall/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

namespace tiltwall {

const char* to_string(Coverage c) {
    switch (c) {
        case Coverage::Covered: return "covered";
        case Coverage::Infeasible: return "infeasible";
        case Coverage::Uncovered: return "uncovered";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Refuted: return "Refuted";
        case Verdict::WallsRemain: return "WallsRemain";
        case Verdict::Vacuous: return "Vacuous";
    }
    return "?";
}

Ch3Ceiling ch3_ceiling(const ChernVec2& p) {
    Ch3Ceiling out;
    if (!p.r.is_integer()) return out;
    long r = p.r.num().get_si();
    if (r == 0) {
        if (p.c.sign() > 0 && p.c.is_integer()) {
            out.status = Coverage::Covered;
            out.value = max_ch3_rank0(p.c, p.d);
            out.route = "rank0";
        } else {
            out.route = "rank0 with c <= 0";
        }
        return out;
    }
    if (r == -1 || r == -2) {
        ChernVec dual = dual_class({p.r, p.c, p.d, Rat(0)});
        out = ch3_ceiling(dual.truncate());
        out.route = "dual/" + out.route;
        return out;
    }
    if (r == 1) {
        ChernVec t = twist(ChernVec{p.r, p.c, p.d, Rat(0)}, p.c);
        Rat d0 = -t.d;
        out.route = "rank1 twist " + p.c.str();
        if (d0.sign() < 0) {
            out.status = Coverage::Infeasible;
            return out;
        }
        out.status = Coverage::Covered;
        out.value = max_ch3_rank1(d0) - t.e;
        return out;
    }
    if (r == 2 && p.c.is_integer()) {
        Int c = p.c.num();
        // brings ch1 into {-1, 0}
        Int n = (c % 2 == 0) ? Int(c / 2) : Int((c + 1) / 2);
        ChernVec t = twist(ChernVec{p.r, p.c, p.d, Rat(0)}, Rat(n));
        out.route = "rank2 twist " + n.get_str();
        auto b = max_ch3_rank2(static_cast<int>(t.c.num().get_si()), t.d);
        if (!b) {
            out.status = Coverage::Infeasible;
            return out;
        }
        out.status = Coverage::Covered;
        out.value = *b - t.e;
        return out;
    }
    out.route = "rank " + p.r.str();
    return out;
}

Coverage PrefixEntry::coverage() const {
    if (sub_bound.status == Coverage::Infeasible || quot_bound.status == Coverage::Infeasible)
        return Coverage::Infeasible;
    if (sub_bound.status == Coverage::Uncovered || quot_bound.status == Coverage::Uncovered)
        return Coverage::Uncovered;
    return Coverage::Covered;
}

long rank_cap(const ChernVec& v, const Rat& rho_sq_min) {
    if (!v.r.is_integer() || v.r.sign() < 0) throw std::invalid_argument("rank_cap needs ch0 >= 0");
    if (rho_sq_min.sign() <= 0) throw std::invalid_argument("rank_cap needs a positive radius");
    long R = v.r.num().get_si();
    Rat delta = discriminant(v);
    long cap = R;
    for (long rp = R + 1;; ++rp) {
        if (delta / (Rat(4) * Rat(rp) * Rat(rp - R)) >= rho_sq_min) cap = rp;
        else break;
    }
    return cap;
}

namespace detail {

bool ch1_along_wall(const ChernVec2& v, const ChernVec2& sub, const Wall& w) {
    ChernVec2 quot = v - sub;
    if (sub.r.is_zero() && sub.c.is_zero()) return false;
    if (quot.r.is_zero() && quot.c.is_zero()) return false;
    for (const Surd& b : {w.left(), w.right()}) {
        // ch1^beta = c - beta*r
        if (((-sub.r) * b + sub.c).sign() < 0) return false;
        if (((-quot.r) * b + quot.c).sign() < 0) return false;
    }
    return true;
}

std::vector<std::string> filter_tags(const SearchConstraints& C) {
    std::vector<std::string> tags{"rank_cap", "ch1", "bogomolov_sub", "bogomolov_quot", "discriminant_sum",
                                  "q_exclusion"};
    if (C.section_vanishing_k) tags.push_back("section_vanishing");
    if (C.min_wall) tags.push_back("min_wall");
    return tags;
}

std::vector<CandidateWall> assemble(const ChernVec& v, std::vector<RawCandidate> raw,
                                    const std::vector<std::string>& filters) {
    std::map<std::pair<Rat, Rat>, std::size_t> index;
    std::vector<CandidateWall> out;
    std::sort(raw.begin(), raw.end(), [](const RawCandidate& a, const RawCandidate& b) { return a.sub < b.sub; });
    for (auto& rc : raw) {
        auto key = std::make_pair(rc.wall.center, rc.wall.radius_sq);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            out.push_back({rc.wall, {}, filters});
        }
        PrefixEntry pe;
        pe.sub = rc.sub;
        pe.quot = v.truncate() - rc.sub;
        pe.sub_bound = ch3_ceiling(pe.sub);
        pe.quot_bound = ch3_ceiling(pe.quot);
        if (pe.coverage() == Coverage::Covered) pe.e_total_bound = pe.sub_bound.value + pe.quot_bound.value;
        out[it->second].prefixes.push_back(std::move(pe));
    }
    std::sort(out.begin(), out.end(), [](const CandidateWall& a, const CandidateWall& b) {
        if (a.wall.radius_sq != b.wall.radius_sq) return a.wall.radius_sq > b.wall.radius_sq;
        return a.prefixes.front().sub < b.prefixes.front().sub;
    });
    return out;
}

}  // namespace detail

std::vector<long> ch1_range(const ChernVec2& v, long r_sub, const Wall& W) {
    Rat r(r_sub);
    Surd a = W.left(), b = W.right();
    // x >= r*beta and x <= c + (r - R)*beta at both ends
    Surd lo1 = r * a, lo2 = r * b;
    Surd hi1 = (r - v.r) * a + v.c, hi2 = (r - v.r) * b + v.c;
    Int lo = std::max(lo1, lo2).ceil();
    Int hi = std::min(hi1, hi2).floor();
    std::vector<long> out;
    for (Int x = lo; x <= hi; ++x) {
        ChernVec2 sub{r, Rat(x), Rat(0)};
        ChernVec2 quot = v - sub;
        if (sub.r.is_zero() && sub.c.is_zero()) continue;
        if (quot.r.is_zero() && quot.c.is_zero()) continue;
        out.push_back(x.get_si());
    }
    return out;
}

bool q_forcing(const ChernVec& v, const QRegion& q) {
    if (q.shape != QRegion::Shape::Disk || q.radius_sq.sign() <= 0) return false;
    if (v.r.sign() > 0) return q.center < v.c / v.r;
    return v.r.is_zero() && v.c.sign() > 0;
}

namespace {

struct LinearBounds {
    YRange out;
    // a*y <= b
    void add(const Rat& a, const Rat& b, const std::string& tag) {
        if (a.is_zero()) {
            if (b.sign() < 0 && !out.empty) {
                out.empty = true;
                out.empty_tag = tag;
            }
            return;
        }
        Rat t = b / a;
        if (a.sign() > 0) {
            if (!out.hi || t < *out.hi) {
                out.hi = t;
                out.hi_tag = tag;
            }
        } else if (!out.lo || t > *out.lo) {
            out.lo = t;
            out.lo_tag = tag;
        }
    }
};

}  // namespace

YRange ch2_range(const ChernVec& v, long r_sub, long x_sub, const Profile& P) {
    QRegion q = q_region(v);
    if (!q_forcing(v, q)) throw std::invalid_argument("ch2_range needs a nonempty Q-region on the heart side");
    if (r_sub < 1) throw std::invalid_argument("ch2_range expects a positive subobject rank");
    const Rat R = v.r, C = v.c, D = v.d, r(r_sub), x(x_sub);
    LinearBounds lb;
    lb.add(Rat(2) * r, x * x, "bogomolov_sub");
    Rat rq = R - r;
    lb.add(Rat(-2) * rq, (C - x) * (C - x) - Rat(2) * rq * D, "bogomolov_quot");
    lb.add(R - Rat(2) * r, C * x - x * x - r * D, "discriminant_sum");
    if (R.sign() > 0) {
        Rat dn = R * x - r * C;
        if (dn.is_zero()) {
            lb.out.empty = true;
            lb.out.empty_tag = "vertical";
        } else if (dn.sign() > 0) {
            lb.add(R, q.center * dn + r * D, "q_exclusion");
        } else {
            lb.add(-R, -(q.center * dn + r * D), "q_exclusion");
        }
    } else {
        // concentric family: radius^2 = (D/C)^2 + 2(Cy - xD)/(rC) >= rho_Q^2
        Rat s = D / C;
        lb.add(Rat(-2) / r, -(q.radius_sq - s * s + Rat(2) * x * D / (r * C)), "q_exclusion");
    }
    YRange out = lb.out;
    if (!out.lo || !out.hi) throw std::logic_error("ch2_range: unbounded y-range for " + v.str());
    if (out.empty || *out.lo > *out.hi) {
        out.empty = true;
        if (out.empty_tag.empty()) out.empty_tag = out.lo_tag + "/" + out.hi_tag;
        return out;
    }
    Rat step = Rat(Int(1), Int(P.den2));
    Int first = (*out.lo / step).ceil(), last = (*out.hi / step).floor();
    for (Int i = first; i <= last; ++i) out.values.push_back(Rat(i) * step);
    return out;
}

namespace {

struct Slice {
    long r, x;
    std::vector<detail::RawCandidate> found;
    std::vector<AuditEntry> audit;
};

std::string prefix_str(long r, long x, const Rat& y) {
    return "(" + std::to_string(r) + "," + std::to_string(x) + "," + y.str() + ")";
}

void run_slice(const ChernVec& v, const Profile& P, const QRegion& q, const SearchConstraints& C, Slice& s) {
    YRange yr = ch2_range(v, s.r, s.x, P);
    std::string subject = "(" + std::to_string(s.r) + "," + std::to_string(s.x) + ",*)";
    if (yr.empty) {
        s.audit.push_back({"ch2_range", subject, "empty", yr.empty_tag});
        return;
    }
    s.audit.push_back({"ch2_range", subject, "range",
                       "[" + yr.lo->str() + " (" + yr.lo_tag + "), " + yr.hi->str() + " (" + yr.hi_tag + ")] with " +
                           std::to_string(yr.values.size()) + " lattice points"});
    const ChernVec2 v2 = v.truncate();
    for (const Rat& y : yr.values) {
        ChernVec2 sub{Rat(s.r), Rat(s.x), y};
        WallKind wk = wall(v2, sub);
        std::string reject;
        if (!wk.is_semicircle()) reject = "no_semicircle";
        else if (v.r.sign() > 0 && wk.wall.center > q.center) reject = "q_exclusion";
        else if (v.r.is_zero() && wk.wall.radius_sq < q.radius_sq) reject = "q_exclusion";
        else if (!detail::ch1_along_wall(v2, sub, wk.wall)) reject = "ch1";
        else if (C.min_wall && wk.wall.radius_sq < C.min_wall->radius_sq) reject = "min_wall";
        if (!reject.empty()) {
            s.audit.push_back({"verify", prefix_str(s.r, s.x, y), "rejected", reject});
            continue;
        }
        s.found.push_back({sub, wk.wall});
    }
}

}  // namespace

SearchResult search_walls(const ChernVec& v, const Profile& P, const SearchConstraints& C, const EngineOptions& opt) {
    if (auto why = lattice_violation(v, P); !why.empty()) throw LatticeError(why + " on " + P.name);
    if (v.r.sign() < 0) throw std::invalid_argument("wall search expects ch0 >= 0; dualize first");
    SearchResult res;
    res.q = q_region(v);
    res.forcing = q_forcing(v, res.q);
    const long R = v.r.num().get_si();
    if (!res.forcing) {
        res.cap = R;
        res.audit.push_back({"q_region", v.str(), "not_forcing", to_string(res.q.shape)});
        return res;
    }
    res.audit.push_back({"q_region", v.str(), "forcing",
                         "center " + res.q.center.str() + ", radius_sq " + res.q.radius_sq.str()});
    res.cap = rank_cap(v, res.q.radius_sq);
    res.audit.push_back({"rank_cap", v.str(), "cap", std::to_string(res.cap)});
    if (C.max_rank_override && *C.max_rank_override < res.cap) {
        res.cap = *C.max_rank_override;
        res.audit.push_back({"rank_cap", v.str(), "override", std::to_string(res.cap)});
    }

    const ChernVec2 v2 = v.truncate();
    WallKind qwall = wall(v2, q_partner(v));
    if (!qwall.is_semicircle()) throw std::logic_error("Q-circle is not a wall of " + v.str());

    std::vector<Slice> slices;
    for (long r = 1; r <= res.cap; ++r) {
        auto xs = ch1_range(v2, r, qwall.wall);
        res.audit.push_back({"ch1_range", "r=" + std::to_string(r), "window",
                             xs.empty() ? "empty" : "[" + std::to_string(xs.front()) + ", " +
                                                        std::to_string(xs.back()) + "]"});
        for (long x : xs) {
            if (r == 1 && C.section_vanishing_k && x >= -(*C.section_vanishing_k - 1)) {
                res.audit.push_back({"section_vanishing", "(1," + std::to_string(x) + ",*)", "rejected",
                                     "k=" + std::to_string(*C.section_vanishing_k)});
                continue;
            }
            slices.push_back({r, x, {}, {}});
        }
    }

    unsigned nthreads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(slices.size())));
    if (nthreads <= 1) {
        for (auto& s : slices) run_slice(v, P, res.q, C, s);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(nthreads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < nthreads; ++t)
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t i = next++; i < slices.size(); i = next++)
                            run_slice(v, P, res.q, C, slices[i]);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<detail::RawCandidate> raw;
    for (auto& s : slices) {
        raw.insert(raw.end(), s.found.begin(), s.found.end());
        res.audit.insert(res.audit.end(), s.audit.begin(), s.audit.end());
    }
    res.candidates = detail::assemble(v, std::move(raw), detail::filter_tags(C));
    return res;
}

std::vector<CandidateWall> enumerate_candidates(const ChernVec& v, const Profile& P, const SearchConstraints& C,
                                                const EngineOptions& opt) {
    return search_walls(v, P, C, opt).candidates;
}

Certificate refute_ch3(const ChernVec& v, const Profile& P, const SearchConstraints& C, const EngineOptions& opt) {
    SearchResult sr = search_walls(v, P, C, opt);
    Certificate cert;
    cert.v = v;
    cert.q = sr.q;
    cert.cap = sr.cap;
    cert.audit = std::move(sr.audit);
    if (!sr.forcing) {
        cert.verdict = Verdict::Vacuous;
        return cert;
    }
    cert.candidates = std::move(sr.candidates);
    for (const auto& cw : cert.candidates) {
        bool survives = false;
        for (const auto& pe : cw.prefixes) {
            std::string subject = pe.sub.str();
            switch (pe.coverage()) {
                case Coverage::Infeasible:
                    cert.audit.push_back({"ch3", subject, "eliminated", "infeasible shape"});
                    break;
                case Coverage::Uncovered:
                    survives = true;
                    cert.audit.push_back({"ch3", subject, "kept", "uncovered shape"});
                    break;
                case Coverage::Covered:
                    if (*pe.e_total_bound >= v.e) {
                        survives = true;
                        cert.audit.push_back({"ch3", subject, "kept", "e_total " + pe.e_total_bound->str()});
                    } else {
                        cert.audit.push_back({"ch3", subject, "eliminated",
                                              "e_total " + pe.e_total_bound->str() + " < " + v.e.str()});
                    }
                    break;
            }
        }
        if (survives) cert.surviving.push_back(cw);
    }
    cert.verdict = cert.surviving.empty() ? Verdict::Refuted : Verdict::WallsRemain;
    return cert;
}

unsigned threads_from_env() {
    const char* s = std::getenv("TILTWALL_THREADS");
    if (!s) return 1;
    char* end = nullptr;
    long n = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || n < 1) return 1;
    return static_cast<unsigned>(std::min(n, 256L));
}

}  // namespace tiltwall
