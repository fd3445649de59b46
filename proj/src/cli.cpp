#include "zonotopal/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "zonotopal/brionvergne.hpp"
#include "zonotopal/corpus.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/serialize.hpp"

namespace zonotopal {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nested lists of integers or p/q rationals, e.g. "[[1,0],[0,2]]" or "[1/7,-2/9]".
class ListParser {
public:
    explicit ListParser(const std::string& text) : s_(text) {}

    Json parse() {
        Json v = value();
        skip();
        if (pos_ != s_.size()) throw UsageError("trailing characters in '" + s_ + "'");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Json value() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '[') {
            ++pos_;
            Json arr = Json::array();
            skip();
            if (pos_ < s_.size() && s_[pos_] == ']') {
                ++pos_;
                return arr;
            }
            while (true) {
                arr.push_back(value());
                skip();
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < s_.size() && s_[pos_] == ']') {
                    ++pos_;
                    return arr;
                }
                throw UsageError("malformed list '" + s_ + "'");
            }
        }
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                    s_[pos_] == '+' || s_[pos_] == '/' || s_[pos_] == '"'))
            ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        tok.erase(std::remove(tok.begin(), tok.end(), '"'), tok.end());
        if (tok.empty()) throw UsageError("malformed list '" + s_ + "'");
        return tok;
    }

    std::string s_;
    size_t pos_ = 0;
};

RatVec parse_vector(const std::string& text) {
    Json j = ListParser(text).parse();
    if (!j.is_array()) throw UsageError("expected a vector, got '" + text + "'");
    RatVec v;
    for (const auto& e : j) {
        if (!e.is_string()) throw UsageError("expected a flat vector, got '" + text + "'");
        try {
            v.push_back(parse_rational(e.get<std::string>()));
        } catch (const Error&) {
            throw UsageError("bad number in '" + text + "'");
        }
    }
    return v;
}

LatticePoint integer_vector(const RatVec& v, const std::string& flag) {
    LatticePoint p;
    for (const auto& q : v) {
        if (!is_integer(q) || !q.get_num().fits_slong_p()) throw UsageError(flag + " must be an integer vector");
        p.push_back(q.get_num().get_si());
    }
    return p;
}

IntMatrix parse_matrix(const std::string& text) {
    Json j = ListParser(text).parse();
    if (!j.is_array()) throw UsageError("--x must be a matrix");
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw UsageError("--x must be a list of rows");
        std::vector<long> r;
        for (const auto& e : row) {
            std::string t = e.get<std::string>();
            char* end = nullptr;
            long v = std::strtol(t.c_str(), &end, 10);
            if (t.empty() || *end != '\0') throw UsageError("--x entries must be integers");
            r.push_back(v);
        }
        if (!m.empty() && r.size() != m.front().size()) throw UsageError("--x rows have different lengths");
        m.push_back(r);
    }
    return m;
}

std::string point_text(const LatticePoint& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::string vec_text(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::string index_text(const IndexSet& s) {
    std::string t = "{";
    for (size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i] + 1);
    return t + "}";
}

std::string hilbert_text(const std::vector<int>& h) {
    std::string s;
    for (size_t i = 0; i < h.size(); ++i) s += (i ? " " : "") + std::to_string(h[i]);
    return s;
}

struct Job {
    GList x;
    std::optional<LatticePoint> z;
    std::optional<RatVec> u;
    std::optional<RatVec> w;
    std::optional<int> cap;
};

struct Output {
    std::string text;
    Json json;
};

LatticePoint require_u(const Job& job) {
    if (!job.u) throw UsageError("this command needs --u");
    return integer_vector(*job.u, "--u");
}

LatticePoint z_or_zero(const Job& job) { return job.z ? *job.z : LatticePoint(job.x.dim(), 0); }

RatVec w_or_default(const Job& job) { return job.w ? *job.w : short_regular(job.x); }

Output periodic_list(const std::vector<PeriodicPoly>& space) {
    Output o;
    o.json = Json{{"basis", Json::array()}, {"hilbert", hilbert(space)}};
    for (const auto& p : space) {
        o.text += p.str() + "\n";
        o.json["basis"].push_back(to_json(p));
    }
    o.text += "hilbert: " + hilbert_text(hilbert(space)) + "\n";
    return o;
}

Output span_output(const GradedSpan& s) {
    Output o;
    for (const auto& p : s.basis) o.text += "deg " + std::to_string(p.degree()) + ": " + p.str() + "\n";
    if (s.homogeneous) o.text += "hilbert: " + hilbert_text(s.hilbert()) + "\n";
    o.json = Json{{"basis", to_json(s)}};
    if (s.homogeneous) o.json["hilbert"] = s.hilbert();
    return o;
}

Output report_output(const CheckReport& r) {
    Output o;
    o.text = r.identity + ": " + (r.ok ? "pass" : "fail") + " (" + std::to_string(r.points) + " points)";
    if (!r.ok) o.text += " first counterexample " + r.counterexample;
    o.text += "\n";
    o.json = to_json(r);
    return o;
}

using Handler = std::function<Output(const Job&)>;

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;
    h["tutte"] = [](const Job& j) {
        BivarPoly p = tutte(j.x);
        return Output{p.str() + "\n", to_json(p)};
    };
    h["arith-tutte"] = [](const Job& j) {
        BivarPoly p = arithmetic_tutte(j.x);
        return Output{p.str() + "\n", to_json(p)};
    };
    h["vertices"] = [](const Job& j) {
        Output o;
        o.json = Json::array();
        for (const auto& v : vertices(j.x)) {
            o.text += v.character.str() + " fixes " + index_text(v.x_phi) + "\n";
            Json e{{"character", to_json(v.character)}, {"fixed", Json::array()}, {"torsion_outside", v.tors_count}};
            for (int i : v.x_phi) e["fixed"].push_back(i + 1);
            o.json.push_back(e);
        }
        return o;
    };
    h["p-basis"] = [](const Job& j) { return span_output(p_basis(j.x)); };
    h["d-basis"] = [](const Job& j) { return span_output(d_basis(j.x)); };
    h["pper-basis"] = [](const Job& j) { return periodic_list(pper_basis(j.x)); };
    h["pper-internal"] = [](const Job& j) { return periodic_list(pper_internal_basis(j.x)); };
    h["dm-basis"] = [](const Job& j) {
        Output o;
        o.json = Json::array();
        for (const auto& f : dm_basis(j.x)) {
            o.text += f.str() + "\n";
            o.json.push_back(to_json(f));
        }
        return o;
    };
    h["todd"] = [](const Job& j) {
        int cap = j.cap ? *j.cap : j.x.size() - j.x.dim() + 1;
        PeriodicSeries s = periodic_todd(j.x, lattice_element(z_or_zero(j)), cap);
        Output o;
        o.json = Json{{"cap", s.cap}, {"terms", Json::array()}};
        for (const auto& [c, series] : s.terms) {
            o.text += c.str() + ": " + series.body().str() + "\n";
            o.json["terms"].push_back(Json{{"character", to_json(c)}, {"series", to_json(series.body())}});
        }
        return o;
    };
    h["f-tilde"] = [](const Job& j) {
        PeriodicPoly p = f_tilde(j.x, lattice_element(z_or_zero(j)));
        return Output{p.str() + "\n", to_json(p)};
    };
    h["count"] = [](const Job& j) {
        Integer n = vpf_count(j.x, require_u(j));
        return Output{n.get_str() + "\n", Json(n.get_str())};
    };
    h["bv-count"] = [](const Job& j) {
        Cyclotomic v = bv_count(j.x, z_or_zero(j), require_u(j), j.w ? *j.w : RatVec{});
        return Output{v.str() + "\n", to_json(v)};
    };
    h["volume"] = [](const Job& j) {
        if (!j.u) throw UsageError("this command needs --u");
        Rational v = tx_value(j.x, *j.u);
        return Output{to_string(v) + "\n", to_json(v)};
    };
    h["box"] = [](const Job& j) {
        if (!j.u) throw UsageError("this command needs --u");
        Rational v = bx_value(j.x, *j.u);
        return Output{to_string(v) + "\n", to_json(v)};
    };
    h["quasipoly"] = [](const Job& j) {
        Output o;
        o.json = Json::array();
        for (const auto& c : big_cells(j.x)) {
            QuasiFunction q = quasi_fit(j.x, c);
            o.text += "cell " + vec_text(c.sample) + ": " + q.str() + "\n";
            o.json.push_back(Json{{"sample", to_json(c.sample)}, {"quasipolynomial", to_json(q)}});
        }
        return o;
    };
    h["cells"] = [](const Job& j) {
        BvContext ctx(j.x);
        Output o;
        o.json = Json::array();
        for (size_t k = 0; k < ctx.cells().size(); ++k) {
            const Cell& c = ctx.cells()[k];
            const MPoly& p = ctx.piece(static_cast<int>(k));
            o.text += "cell " + vec_text(c.sample) + ": " + p.str() + "\n";
            Json rays = Json::array();
            for (const auto& r : c.rays) rays.push_back(to_json(r));
            o.json.push_back(Json{{"sample", to_json(c.sample)}, {"rays", rays}, {"piece", to_json(p)}});
        }
        return o;
    };
    h["zonotope"] = [](const Job& j) {
        HPolytope z = zonotope_hrep(j.x);
        RatVec w = w_or_default(j);
        auto interior = lattice_points(j.x, LatticeMode::Interior);
        auto shifted = lattice_points(j.x, LatticeMode::Shifted, w);
        Output o;
        Json ineq = Json::array();
        for (size_t i = 0; i < z.A.size(); ++i) {
            o.text += vec_text(z.A[i]) + " . u <= " + to_string(z.b[i]) + "\n";
            ineq.push_back(Json{{"a", to_json(z.A[i])}, {"b", to_json(z.b[i])}});
        }
        o.text += "interior: " + std::to_string(interior.size()) + "\n";
        for (const auto& p : interior) o.text += "  " + point_text(p) + "\n";
        o.text += "shifted by " + vec_text(w) + ": " + std::to_string(shifted.size()) + "\n";
        for (const auto& p : shifted) o.text += "  " + point_text(p) + "\n";
        o.json = Json{{"inequalities", ineq}, {"interior", interior}, {"w", to_json(w)}, {"shifted", shifted}};
        return o;
    };
    h["l-map"] = [](const Job& j) {
        RatVec w = w_or_default(j);
        std::vector<PeriodicPoly> polys;
        if (j.z)
            polys.push_back(f_tilde(j.x, lattice_element(*j.z)));
        else
            polys = pper_basis(j.x);
        LMap lm(j.x, w);
        Output o;
        o.json = Json::array();
        for (const auto& p : polys) {
            LClass l = lm(p);
            o.text += p.str() + " ->";
            for (size_t i = 0; i < l.support.size(); ++i)
                if (!l.coeffs[i].is_zero()) o.text += " [" + l.coeffs[i].str() + "]" + point_text(l.support[i]);
            o.text += "\n";
            o.json.push_back(Json{{"poly", to_json(p)}, {"functional", to_json(l)}});
        }
        return o;
    };
    h["check-continuity"] = [](const Job& j) {
        BvContext ctx(j.x);
        auto internal = pper_internal_basis(j.x);
        CheckReport rep;
        rep.identity = "internal members are continuous";
        Output o;
        o.json = Json{{"internal", Json::array()}, {"basis", Json::array()}};
        for (const auto& p : internal) {
            bool ok = continuity_check(ctx, p);
            rep.record(ok, p.str());
            o.text += "internal " + p.str() + ": " + (ok ? "continuous" : "jumps") + "\n";
            o.json["internal"].push_back(Json{{"poly", to_json(p)}, {"continuous", ok}});
        }
        for (const auto& p : pper_basis(j.x)) {
            bool ok = continuity_check(ctx, p);
            bool member = pper_in_span(internal, p);
            rep.record(ok == member, "classification of " + p.str());
            o.text += "basis " + p.str() + ": " + (ok ? "continuous" : "jumps") + "\n";
            o.json["basis"].push_back(Json{{"poly", to_json(p)}, {"continuous", ok}, {"internal", member}});
        }
        Output r = report_output(rep);
        o.text += r.text;
        o.json["report"] = r.json;
        return o;
    };
    h["check-unity"] = [](const Job& j) {
        PeriodicPoly sum = partition_of_unity(j.x);
        CheckReport rep;
        rep.identity = "sum of B_X(z) f~_z is 1";
        rep.record(sum == PeriodicPoly::constant(j.x.group(), Cyclotomic(1)), sum.str());
        Output o = report_output(rep);
        o.text = "sum: " + sum.str() + "\n" + o.text;
        o.json["sum"] = to_json(sum);
        return o;
    };
    h["check-delta"] = [](const Job& j) {
        RatVec w = w_or_default(j);
        std::vector<LatticePoint> zs = j.z ? std::vector<LatticePoint>{*j.z} : lattice_points(j.x, LatticeMode::Shifted, w);
        CheckReport rep;
        rep.identity = "f_z(D) B_X is the delta at z";
        Output o;
        o.json = Json{{"w", to_json(w)}, {"values", Json::array()}};
        for (const auto& z : zs) {
            for (const auto& [lambda, v] : box_delta_check(j.x, z, w)) {
                bool ok = v == Cyclotomic(lambda == z ? 1 : 0);
                rep.record(ok, "z=" + point_text(z) + " at " + point_text(lambda) + " -> " + v.str());
                if (!v.is_zero()) o.text += "z=" + point_text(z) + " " + point_text(lambda) + ": " + v.str() + "\n";
                o.json["values"].push_back(Json{{"z", z}, {"point", lambda}, {"value", to_json(v)}});
            }
        }
        Output r = report_output(rep);
        o.text += r.text;
        o.json["report"] = r.json;
        return o;
    };
    h["wall-jump"] = [](const Job& j) {
        BvContext ctx(j.x);
        Output o;
        o.json = Json::array();
        CheckReport rep;
        rep.identity = "residue jump equals the piece difference";
        for (const auto& wall : walls(ctx)) {
            WallReport w = check_wall(ctx, wall);
            std::vector<long> n = wall.normal;
            rep.record(w.matches && w.leading_form, point_text(n));
            o.text += "normal " + point_text(n) + ": jump " + w.jump.str() + (w.matches ? " (matches)" : " (differs)") +
                      (w.leading_form ? "" : " (leading form fails)") + "\n";
            o.json.push_back(Json{{"normal", n},
                                  {"v12", to_json(w.v12)},
                                  {"jump", to_json(w.jump)},
                                  {"difference", to_json(w.difference)},
                                  {"matches", w.matches},
                                  {"leading_form", w.leading_form}});
        }
        Output r = report_output(rep);
        o.text += r.text;
        o.json = Json{{"walls", o.json}, {"report", r.json}};
        return o;
    };
    h["check-deconv"] = [](const Job& j) {
        BvContext ctx(j.x);
        return report_output(box_deconvolution_check(ctx, w_or_default(j)));
    };
    return h;
}

std::string usage_text(const std::map<std::string, Handler>& h) {
    std::string s = "usage: zonotopal <command> --x MATRIX [--group G] [--u V] [--z V] [--w V] [--cap K] [--json] [--seed S]\ncommands:";
    for (const auto& [name, f] : h) s += " " + name;
    return s + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto table = handlers();
    CLI::App app{"zonotopal"};
    std::string command, xs, group, us, zs, ws;
    int cap = -1;
    bool json = false;
    std::optional<std::uint64_t> seed;
    app.add_option("command", command)->required();
    app.add_option("--x", xs);
    app.add_option("--group", group);
    app.add_option("--u", us);
    app.add_option("--z", zs);
    app.add_option("--w", ws);
    app.add_option("--cap", cap);
    app.add_flag("--json", json);
    app.add_option("--seed", seed);
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << usage_text(table);
        return 1;
    }
    if (const char* threads = std::getenv("ZONOTOPAL_THREADS")) {
        char* end = nullptr;
        long t = std::strtol(threads, &end, 10);
        if (*threads == '\0' || *end != '\0' || t < 1) {
            err << "ZONOTOPAL_THREADS must be a positive integer\n";
            return 1;
        }
    }
    auto it = table.find(command);
    if (it == table.end()) {
        err << "unknown command '" << command << "'\n" << usage_text(table);
        return 1;
    }
    try {
        Job job;
        if (!xs.empty()) {
            IntMatrix m = parse_matrix(xs);
            FgGroup g = group.empty() ? FgGroup::lattice(static_cast<int>(m.size())) : FgGroup::parse(group);
            job.x = GList::from_rows(m, g);
        } else if (seed) {
            job.x = corpus(*seed, CorpusLimits{1, 2, 5, 3, {}, 1}).front();
        } else {
            throw UsageError("this command needs --x or --seed");
        }
        if (!us.empty()) job.u = parse_vector(us);
        if (!zs.empty()) job.z = integer_vector(parse_vector(zs), "--z");
        if (!ws.empty()) job.w = parse_vector(ws);
        if (cap >= 0) job.cap = cap;
        const int d = job.x.dim();
        if ((job.u && static_cast<int>(job.u->size()) != d) || (job.z && static_cast<int>(job.z->size()) != d) ||
            (job.w && static_cast<int>(job.w->size()) != d))
            throw UsageError("vectors must have one entry per free coordinate");
        Output o = it->second(job);
        if (json) {
            Json doc{{"command", command}, {"list", to_json(job.x)}, {"result", o.json}};
            out << doc.dump() << "\n";
        } else {
            out << o.text;
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n" << usage_text(table);
        return 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.is_internal() ? 3 : 2;
    }
}

}  // namespace zonotopal
