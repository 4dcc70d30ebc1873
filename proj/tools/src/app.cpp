#include "app.hpp"

#include "fixtures.hpp"
#include "json_io.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef TILTWALL_DEFAULT_FIXTURES
#define TILTWALL_DEFAULT_FIXTURES "data/sign_fixtures.json"
#endif

namespace tiltwall::app {

using io::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(what + ": " + e.what());
    }
}

// "(r,c,d,e)", a ChernVec JSON object, or @file holding either (a certificate's "class" works too).
ChernVec read_class(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body[0] == '@') body = slurp(body.substr(1));
    auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '{') {
        json j = parse_json_text(body, "class JSON");
        if (j.contains("class")) j = j.at("class");
        return io::chern_from_json(j);
    }
    return parse_class(body);
}

ChernVec2 read_class2(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body[0] == '@') body = slurp(body.substr(1));
    auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '{') {
        json j = parse_json_text(body, "class JSON");
        return io::chern2_from_json(j);
    }
    try {
        return parse_class2(body);
    } catch (const std::exception&) {
        return parse_class(body).truncate();
    }
}

Profile read_profile(const std::string& name_or_path) {
    if (std::filesystem::is_regular_file(name_or_path))
        return io::profile_from_json(parse_json_text(slurp(name_or_path), "profile JSON"));
    return profile_by_name(name_or_path);
}

void require_lattice(const ChernVec& v, const Profile& P) {
    if (auto why = lattice_violation(v, P); !why.empty())
        throw LatticeError("class " + v.str() + " is not in the " + P.name + " lattice: " + why);
}

std::string int_str(const Int& n) { return n.get_str(); }

void print_wall_line(std::ostream& out, const CandidateWall& c) {
    out << "wall center=" << c.wall.center << " radius_sq=" << c.wall.radius_sq << " beta=[" << c.wall.left().str()
        << ", " << c.wall.right().str() << "]";
    for (const auto& p : c.prefixes) {
        out << " sub=" << p.sub.str() << " " << to_string(p.coverage());
        if (p.e_total_bound) out << " e_bound=" << *p.e_total_bound;
    }
    out << '\n';
}

void print_q(std::ostream& out, const QRegion& q) {
    out << "q_region shape=" << to_string(q.shape) << " center=" << q.center << " radius_sq=" << q.radius_sq;
    if (q.shape == QRegion::Shape::HalfPlane) out << " negative_side=" << q.negative_side;
    if ((q.shape == QRegion::Shape::Disk || q.shape == QRegion::Shape::Unbounded) && q.radius_sq.sign() >= 0)
        out << " beta=[" << q.left().str() << ", " << q.right().str() << "]";
    out << '\n';
}

struct Options {
    bool as_json = false;
    std::vector<std::string> positional;
    std::string profile = "P3";
    std::optional<long> vanishing;
    std::string expect;
    std::string fixtures = TILTWALL_DEFAULT_FIXTURES;
    std::string output;
    std::string beta = "0";
    long n = 0;
    std::string d, c;
    long k = 0, f = 0, dmax = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tilt-stability wall calculator", "tiltwall"};
    app.require_subcommand(1);
    Options o;
    int rc = 0;
    EngineOptions engine{threads_from_env()};

    auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.as_json, "machine-readable output"); };

    // class
    auto* cls = app.add_subcommand("class", "class algebra");
    cls->require_subcommand(1);
    auto* c_twist = cls->add_subcommand("twist", "ch * exp(-beta H)");
    c_twist->add_option("V", o.positional)->required()->expected(1);
    c_twist->add_option("--beta", o.beta)->required();
    auto* c_tensor = cls->add_subcommand("tensor", "tensor with O(nH)");
    c_tensor->add_option("V", o.positional)->required()->expected(1);
    c_tensor->add_option("--n", o.n)->required();
    auto* c_dual = cls->add_subcommand("dual", "class of the derived dual");
    c_dual->add_option("V", o.positional)->required()->expected(1);
    auto* c_delta = cls->add_subcommand("delta", "discriminant");
    c_delta->add_option("V", o.positional)->required()->expected(1);
    for (auto* s : {c_twist, c_tensor, c_dual, c_delta}) add_json(s);

    auto emit_class = [&](const ChernVec& v) {
        if (o.as_json)
            out << io::to_json(v).dump() << '\n';
        else
            out << v.str() << '\n';
    };
    c_twist->callback([&] { emit_class(twist(read_class(o.positional[0]), Rat::parse(o.beta))); });
    c_tensor->callback([&] { emit_class(tensor_O(read_class(o.positional[0]), o.n)); });
    c_dual->callback([&] { emit_class(dual_class(read_class(o.positional[0]))); });
    c_delta->callback([&] {
        Rat d = discriminant(read_class2(o.positional[0]));
        if (o.as_json)
            out << json{{"delta", io::to_json(d)}}.dump() << '\n';
        else
            out << d << '\n';
    });

    // profile
    auto* prof = app.add_subcommand("profile", "print a profile as JSON");
    prof->add_option("P", o.profile, "name or JSON path")->required();
    prof->callback([&] { out << io::to_json(read_profile(o.profile)).dump(2) << '\n'; });

    // wall
    auto* wl = app.add_subcommand("wall", "numerical wall W(V, W)");
    wl->add_option("classes", o.positional)->required()->expected(2);
    add_json(wl);
    wl->callback([&] {
        WallKind k = wall(read_class2(o.positional[0]), read_class2(o.positional[1]));
        if (o.as_json) {
            out << io::to_json(k).dump() << '\n';
            return;
        }
        switch (k.tag) {
            case WallKind::Tag::Semicircle:
                out << "semicircle center=" << k.wall.center << " radius_sq=" << k.wall.radius_sq << " beta=["
                    << k.wall.left().str() << ", " << k.wall.right().str() << "]\n";
                break;
            case WallKind::Tag::Vertical:
                out << "vertical beta=" << k.beta << (k.actual ? "" : " numerical-only") << '\n';
                break;
            case WallKind::Tag::Degenerate:
                out << "degenerate\n";
                break;
        }
    });

    // qdisk
    auto* qd = app.add_subcommand("qdisk", "region Q(V) < 0");
    qd->add_option("V", o.positional)->required()->expected(1);
    add_json(qd);
    qd->callback([&] {
        QRegion q = q_region(read_class(o.positional[0]));
        if (o.as_json)
            out << io::to_json(q).dump() << '\n';
        else
            print_q(out, q);
    });

    // bounds
    auto* bd = app.add_subcommand("bounds", "ch3 and genus bounds");
    bd->require_subcommand(1);
    auto rat_out = [&](const std::string& key, const Rat& v) {
        if (o.as_json)
            out << json{{key, io::to_json(v)}}.dump() << '\n';
        else
            out << v << '\n';
    };
    auto int_out = [&](const std::string& key, const Int& v) {
        if (o.as_json)
            out << json{{key, int_str(v)}}.dump() << '\n';
        else
            out << int_str(v) << '\n';
    };
    auto* b_E = bd->add_subcommand("E", "E(d,k)");
    auto* b_eps = bd->add_subcommand("eps", "eps(d,k)");
    auto* b_conj = bd->add_subcommand("conj", "range-B conjectural bound");
    for (auto* s : {b_E, b_eps, b_conj}) {
        s->add_option("--d", o.d)->required();
        s->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
        add_json(s);
    }
    b_E->callback([&] { rat_out("E", bound_E(Rat::parse(o.d), o.k)); });
    b_eps->callback([&] {
        Rat d = Rat::parse(o.d);
        if (o.as_json)
            out << json{{"eps", io::to_json(eps(d, o.k))},
                        {"eps1", io::to_json(eps1(d))},
                        {"eps_tilde", io::to_json(eps_tilde(d, o.k))},
                        {"f", io::to_json(remainder(d, o.k).f)}}
                       .dump()
                << '\n';
        else
            out << eps(d, o.k) << '\n';
    });
    b_conj->callback([&] {
        Rat d = Rat::parse(o.d);
        if (!d.is_integer()) throw UsageError("conj needs an integral degree");
        ConjBound cb = conj_bound_rangeB(d.num(), o.k);
        if (o.as_json)
            out << io::to_json(cb).dump() << '\n';
        else
            out << "E=" << int_str(cb.E) << " genus=" << int_str(cb.genus) << " f=" << cb.f << " h=" << int_str(cb.h)
                << " regime=" << to_string(cb.regime) << '\n';
    });
    auto* b_A = bd->add_subcommand("A", "A(k,f)");
    auto* b_B = bd->add_subcommand("B", "B(k,f)");
    for (auto* s : {b_A, b_B}) {
        s->add_option("--k", o.k)->required();
        s->add_option("--f", o.f)->required();
        add_json(s);
    }
    b_A->callback([&] { int_out("A", A_kf(o.k, o.f)); });
    b_B->callback([&] { int_out("B", B_kf(o.k, o.f)); });
    auto* b_refl = bd->add_subcommand("reflexive", "rank-two reflexive sheaves with c1 = c");
    b_refl->add_option("--c", o.c)->required();
    b_refl->add_option("--d", o.d)->required();
    add_json(b_refl);
    b_refl->callback([&] {
        Rat c = Rat::parse(o.c);
        if (!c.is_integer()) throw UsageError("reflexive needs an integral --c");
        auto r = hartshorne_reflexive(c.num().get_si(), Rat::parse(o.d));
        if (o.as_json) {
            out << io::to_json(r).dump() << '\n';
            return;
        }
        out << "case=" << to_string(r.which) << " d_max=" << r.d_max << " case2_threshold=" << r.case2_threshold;
        if (r.which != ReflexiveBoundReport::Case::OutOfRange) out << " e_bound=" << r.e_bound;
        if (r.h2_bound) out << " h2_bound=" << *r.h2_bound;
        if (r.e_bound_other) out << " e_bound_other=" << *r.e_bound_other;
        out << '\n';
    });
    auto* b_r0 = bd->add_subcommand("rank0", "max ch3 for rank 0");
    b_r0->add_option("--c", o.c)->required();
    b_r0->add_option("--d", o.d)->required();
    add_json(b_r0);
    b_r0->callback([&] { rat_out("e_max", max_ch3_rank0(Rat::parse(o.c), Rat::parse(o.d))); });
    auto* b_r1 = bd->add_subcommand("rank1", "max ch3 for rank 1, c = 0");
    b_r1->add_option("--d", o.d)->required();
    add_json(b_r1);
    b_r1->callback([&] { rat_out("e_max", max_ch3_rank1(Rat::parse(o.d))); });
    auto* b_r2 = bd->add_subcommand("rank2", "max ch3 for rank 2, c in {-1, 0}");
    b_r2->add_option("--c", o.c)->required();
    b_r2->add_option("--d", o.d)->required();
    add_json(b_r2);
    b_r2->callback([&] {
        Rat c = Rat::parse(o.c);
        if (!c.is_integer()) throw UsageError("rank2 needs an integral --c");
        auto e = max_ch3_rank2(static_cast<int>(c.num().get_si()), Rat::parse(o.d));
        if (o.as_json)
            out << json{{"e_max", e ? json(io::to_json(*e)) : json(nullptr)}}.dump() << '\n';
        else
            out << (e ? e->str() : std::string("none")) << '\n';
    });

    // enumerate / refute
    auto* en = app.add_subcommand("enumerate", "candidate walls for V");
    auto* rf = app.add_subcommand("refute", "try to refute the ch3 value of V");
    for (auto* s : {en, rf}) {
        s->add_option("V", o.positional)->required()->expected(1);
        s->add_option("--profile", o.profile, "name or JSON path");
        s->add_option("--vanishing", o.vanishing, "H^0(I(k-1)) = 0")->check(CLI::PositiveNumber);
        add_json(s);
    }
    rf->add_option("--expect", o.expect)->check(CLI::IsMember({"refuted", "walls-remain", "vacuous"}));

    auto constraints = [&] {
        SearchConstraints C;
        C.section_vanishing_k = o.vanishing;
        return C;
    };
    en->callback([&] {
        Profile P = read_profile(o.profile);
        ChernVec v = read_class(o.positional[0]);
        require_lattice(v, P);
        SearchResult r = search_walls(v, P, constraints(), engine);
        if (o.as_json) {
            json j = io::to_json(r);
            j["class"] = io::to_json(v);
            j["profile"] = P.name;
            out << j.dump(2) << '\n';
            return;
        }
        print_q(out, r.q);
        out << "forcing=" << (r.forcing ? "yes" : "no") << " rank_cap=" << r.cap
            << " candidates=" << r.candidates.size() << '\n';
        for (const auto& c : r.candidates) print_wall_line(out, c);
    });
    rf->callback([&] {
        Profile P = read_profile(o.profile);
        ChernVec v = read_class(o.positional[0]);
        require_lattice(v, P);
        Certificate cert = refute_ch3(v, P, constraints(), engine);
        if (o.as_json) {
            out << io::to_json(cert).dump(2) << '\n';
        } else {
            out << "verdict " << to_string(cert.verdict) << '\n';
            print_q(out, cert.q);
            out << "rank_cap=" << cert.cap << " candidates=" << cert.candidates.size()
                << " surviving=" << cert.surviving.size() << '\n';
            for (const auto& c : cert.surviving) print_wall_line(out, c);
        }
        if (!o.expect.empty()) {
            Verdict want = o.expect == "refuted"        ? Verdict::Refuted
                           : o.expect == "walls-remain" ? Verdict::WallsRemain
                                                        : Verdict::Vacuous;
            if (cert.verdict != want) {
                err << "expected " << o.expect << ", got " << to_string(cert.verdict) << '\n';
                rc = 2;
            }
        }
    });

    // certify
    auto* ce = app.add_subcommand("certify", "certify polynomial sign fixtures with Sturm sequences");
    ce->add_option("--fixtures", o.fixtures)->check(CLI::ExistingFile);
    add_json(ce);
    ce->callback([&] {
        auto fixtures = io::load_fixtures(o.fixtures);
        auto results = io::certify(fixtures);
        std::size_t ok = 0;
        json arr = json::array();
        for (const auto& r : results) {
            ok += r.ok;
            if (o.as_json) {
                json roots = json::array();
                for (const auto& b : r.report.roots) roots.push_back({io::to_json(b.lo), io::to_json(b.hi)});
                arr.push_back({{"id", r.fixture->id},
                               {"interval", r.fixture->interval.str()},
                               {"claimed", to_string(r.fixture->claimed)},
                               {"certified", to_string(r.report.kind)},
                               {"roots", roots},
                               {"ok", r.ok}});
            } else {
                out << (r.ok ? "PASS " : "FAIL ") << r.fixture->id << " on " << r.fixture->interval.str() << ": "
                    << to_string(r.report.kind);
                if (!r.ok) out << " (claimed " << to_string(r.fixture->claimed) << ")";
                out << '\n';
            }
        }
        if (o.as_json)
            out << json{{"fixtures", arr}, {"certified", ok}, {"total", results.size()}}.dump(2) << '\n';
        else
            out << "certified " << ok << "/" << results.size() << '\n';
        if (ok != results.size()) rc = 2;
    });

    // rangeb
    auto* rb = app.add_subcommand("rangeb", "range-B report for (k, f, d)");
    rb->add_option("--k", o.k)->required();
    rb->add_option("--f", o.f)->required();
    rb->add_option("--d", o.dmax, "degree")->required();
    add_json(rb);
    rb->callback([&] {
        RangeBReport r = rangeb_report(o.k, o.f, o.dmax);
        if (o.as_json) {
            out << io::to_json(r).dump(2) << '\n';
            return;
        }
        out << "k=" << r.k << " f=" << r.f << " d=" << r.d << " A=" << int_str(r.A_f) << " B=" << int_str(r.B_f)
            << " A(f+1)=" << int_str(r.A_f1) << (r.supported ? "" : " unsupported") << '\n';
        out << "heart=" << r.heart_ok << " rank_cap=" << r.rank_cap_ok << " h2_vanishing=" << r.h2_vanishing_ok
            << " y_floor=" << r.y_floor_ok << '\n';
        out << "y_interval=[" << r.ch1.y_interval.lo << ", " << r.ch1.y_interval.hi << "] admissible_x=";
        for (std::size_t i = 0; i < r.ch1.admissible_x.size(); ++i)
            out << (i ? "," : "") << r.ch1.admissible_x[i];
        out << '\n';
        out << "chi_bound=" << int_str(r.chi_bound) << " conjecture_E=" << int_str(r.conjecture_bound)
            << " all_ok=" << r.all_ok() << '\n';
    });

    // special2k11
    auto* sp = app.add_subcommand("special2k11", "closed-form check at d = A(k, 2k-11)");
    sp->add_option("--k", o.k)->required();
    add_json(sp);
    sp->callback([&] {
        SpecialCaseReport r = special_case_2k11(o.k);
        if (o.as_json) {
            out << io::to_json(r).dump(2) << '\n';
            return;
        }
        out << "k=" << r.k << " d=" << int_str(r.d) << " E=" << r.E << " q_margin=" << r.q_margin
            << " y_max=" << r.y_max << " target=" << int_str(r.target) << '\n';
        for (const auto& row : r.rows)
            out << "y=" << row.y << " chi=" << row.chi_G << " h2=" << int_str(row.h2) << " total=" << row.total
                << (row.ok ? "" : " exceeds") << '\n';
        out << (r.passes ? "passes" : "fails") << '\n';
    });

    // plot
    auto* pl = app.add_subcommand("plot", "SVG wall diagram");
    pl->add_option("SPEC", o.positional, "PlotSpec JSON file")->required()->expected(1)->check(CLI::ExistingFile);
    pl->add_option("-o,--output", o.output, "SVG path (stdout when absent)");
    pl->callback([&] {
        io::PlotSpec spec = io::plot_spec_from_json(parse_json_text(slurp(o.positional[0]), "plot spec"));
        Profile P = read_profile(spec.profile);
        require_lattice(spec.v, P);
        SearchConstraints C;
        C.section_vanishing_k = spec.vanishing;
        SearchResult data = spec.layers.walls ? search_walls(spec.v, P, C, engine) : SearchResult{};
        data.q = q_region(spec.v);
        std::string svg = io::emit_svg(spec, data);
        if (o.output.empty()) {
            out << svg;
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f) throw UsageError("cannot write " + o.output);
            f << svg;
        }
    });

    // table
    auto* tb = app.add_subcommand("table", "tables");
    tb->require_subcommand(1);
    auto* gp = tb->add_subcommand("gp", "maximal genus by degree");
    gp->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    gp->add_option("--dmax", o.dmax)->required()->check(CLI::PositiveNumber);
    add_json(gp);
    gp->callback([&] {
        const Profile P3 = profile_by_name("P3");
        json rows = json::array();
        if (!o.as_json) out << "d E genus source\n";
        for (long d = 1; d <= o.dmax; ++d) {
            std::optional<Rat> E, g;
            std::string source = "none";
            if (d > o.k * (o.k - 1)) {
                E = bound_E(Rat(d), o.k);
                g = genus_from_ch3(*E, Rat(d), P3);
                source = "theorem";
            } else if (rangeB_f(Int(d), o.k)) {
                ConjBound cb = conj_bound_rangeB(Int(d), o.k);
                E = Rat(cb.E);
                g = Rat(cb.genus);
                source = "conjecture";
            }
            if (o.as_json) {
                rows.push_back({{"d", d},
                                {"E", E ? json(io::to_json(*E)) : json(nullptr)},
                                {"genus", g ? json(io::to_json(*g)) : json(nullptr)},
                                {"source", source}});
            } else {
                out << d << ' ' << (E ? E->str() : "-") << ' ' << (g ? g->str() : "-") << ' ' << source << '\n';
            }
        }
        if (o.as_json) out << json{{"k", o.k}, {"rows", rows}}.dump(2) << '\n';
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "tiltwall: " << e.what() << '\n';
        return 1;
    } catch (const LatticeError& e) {
        err << "tiltwall: lattice violation: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "tiltwall: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace tiltwall::app
