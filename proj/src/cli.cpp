#include "pochhammer/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pochhammer/errors.hpp"
#include "pochhammer/homology.hpp"
#include "pochhammer/pants.hpp"
#include "pochhammer/pants_io.hpp"

namespace pochhammer::cli {

using nlohmann::json;

namespace {

struct RankFlags {
    bool exact = false;
    bool cross_check = false;
    std::optional<std::uint64_t> seed;
    int trials = 2;

    void attach(CLI::App* app) {
        app->add_flag("--exact", exact, "use fraction-free elimination instead of evaluation mod p");
        app->add_flag("--cross-check", cross_check, "compute both backends and fail if they differ");
        app->add_option("--seed", seed, "seed for the randomized backend (default: $POCHH_SEED or 0)");
        app->add_option("--trials", trials, "evaluation points per randomized rank")->check(CLI::PositiveNumber);
    }

    RankOptions options() const {
        RankOptions o;
        o.backend = exact ? RankBackend::Exact : RankBackend::Randomized;
        o.cross_check = cross_check;
        o.trials = trials;
        if (seed) {
            o.seed = *seed;
        } else if (const char* env = std::getenv("POCHH_SEED"); env != nullptr && *env != '\0') {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (*end != '\0') throw ValidationError(std::string("POCHH_SEED is not an integer: '") + env + "'");
            o.seed = v;
        }
        return o;
    }
};

struct SpaceFlags {
    std::optional<int> genus;
    std::optional<int> punctures;
    std::string alpha_file;
    std::string space = "surface";

    void attach(CLI::App* app) {
        app->add_option("--genus,-g", genus, "surface genus");
        app->add_option("--punctures", punctures, "number of punctures");
        app->add_option("--alpha", alpha_file, "surface file with an alpha matrix (default: Hurewicz)");
        app->add_option("--space", space, "surface, circle or wedge")
            ->check(CLI::IsMember({"surface", "circle", "wedge"}));
    }

    std::pair<Presentation, AlphaHom> resolve() const {
        SurfaceSpec spec;
        if (!alpha_file.empty()) spec = parse_surface_spec(read_file(alpha_file));
        if (genus) spec.genus = *genus;
        if (punctures) spec.punctures = *punctures;
        Presentation p = space == "circle" ? circle_presentation()
                         : space == "wedge" ? wedge_presentation()
                                            : surface_presentation(spec.genus, spec.punctures);
        AlphaHom alpha = spec.alpha ? AlphaHom(p, *spec.alpha) : AlphaHom::hurewicz(p);
        return {std::move(p), std::move(alpha)};
    }
};

json betti_json(const BettiVector& b) { return b.dims; }

std::string names(const PantsGraph& g, const std::vector<int>& curves) {
    std::string out;
    for (int c : curves) {
        if (!out.empty()) out += ", ";
        out += g.curves[static_cast<std::size_t>(c)].name;
    }
    return out.empty() ? "none" : out;
}

json flip_json(const PantsGraph& before, const FlipSpec& f) {
    return {{"curve", before.curves[static_cast<std::size_t>(f.curve)].name},
            {"sleeve1", describe(before, f.sleeve1)},
            {"sleeve2", describe(before, f.sleeve2)}};
}

std::set<int> parse_subset(const std::string& text, std::size_t size) {
    std::set<int> out;
    if (text.empty()) {
        for (std::size_t i = 0; i < size; ++i) out.insert(static_cast<int>(i));
        return out;
    }
    if (text == "none") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.insert(v);
        } catch (const std::logic_error&) {
            throw ValidationError("--subset expects comma-separated pants indices, got '" + item + "'");
        }
    }
    return out;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Twisted L2-Betti numbers of surfaces and Pochhammer bases of pants decompositions", "pochh"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all");

        bool json_out = false;
        RankFlags rank;
        SpaceFlags space;
        std::string file, output, word, subset;
        int genus = 2, r = 1, k = 1;

        auto* betti = app.add_subcommand("betti", "twisted Betti numbers of a surface, circle or wedge");
        space.attach(betti);
        rank.attach(betti);

        auto* loop = app.add_subcommand("loop", "twisted cycle of a loop and whether its class is nonzero");
        space.attach(loop);
        rank.attach(loop);
        loop->add_option("--word,-w", word, "word in the generators")->required();

        auto* check = app.add_subcommand("pants-check", "validate a pants file and report fashionability");
        check->add_option("file", file, "pants file")->required();

        auto* fashion = app.add_subcommand("pants-fashion", "flip null-homologous curves away");
        fashion->add_option("file", file, "pants file")->required();
        fashion->add_option("-o,--output", output, "where to write the fashioned graph");

        auto* poch = app.add_subcommand("pochhammer", "per-pants Pochhammer vectors");
        poch->add_option("file", file, "pants file")->required();
        rank.attach(poch);

        auto* sew = app.add_subcommand("sew", "rank of Pochhammer vectors modulo boundaries");
        sew->add_option("file", file, "pants file")->required();
        sew->add_option("--subset,-J", subset, "comma-separated 0-based pants indices (default: all)");
        rank.attach(sew);

        auto* vortex = app.add_subcommand("vortex", "closed-form Betti numbers of vortex moduli spaces");
        vortex->add_option("--genus,-g", genus, "surface genus")->required();
        vortex->add_option("--rank,-r", r, "vortex number")->required();

        auto* symk = app.add_subcommand("symk", "closed-form Betti numbers of symmetric products");
        symk->add_option("--genus,-g", genus, "surface genus")->required();
        symk->add_option("-k", k, "symmetric power")->required();

        auto* dot = app.add_subcommand("dot", "render a pants file as DOT");
        dot->add_option("file", file, "pants file")->required();

        for (auto* sub : {betti, loop, check, fashion, poch, sew, vortex, symk}) {
            sub->add_flag("--json", json_out, "machine-readable output");
        }

        std::vector<std::string> argv_store{"pochh"};
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<char*> argv;
        for (auto& a : argv_store) argv.push_back(a.data());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? 0 : 2;
        }
        json_ = json_out;

        try {
            if (*betti) return do_betti(space, rank);
            if (*loop) return do_loop(space, rank, word);
            if (*check) return do_check(parse_pants(read_file(file)));
            if (*fashion) return do_fashion(parse_pants(read_file(file)), output);
            if (*poch) return do_pochhammer(parse_pants(read_file(file)), rank);
            if (*sew) return do_sew(parse_pants(read_file(file)), subset, rank);
            if (*vortex) return emit_betti(vortex_betti(genus, r));
            if (*symk) return emit_betti(symk_betti(genus, k));
            if (*dot) {
                const PantsGraph g = parse_pants(read_file(file));
                require_valid(g);
                out_ << export_dot(g);
                return 0;
            }
        } catch (const Error& e) {
            err_ << "error: " << e.what() << '\n';
            return e.user_facing() ? 2 : 1;
        } catch (const std::exception& e) {
            err_ << "internal error: " << e.what() << '\n';
            return 1;
        }
        return 1;
    }

private:
    int emit_betti(const BettiVector& b) {
        if (json_) {
            out_ << json{{"betti", betti_json(b)}}.dump() << '\n';
        } else {
            out_ << "b = " << to_string(b) << '\n';
        }
        return 0;
    }

    int do_betti(const SpaceFlags& space, const RankFlags& rank) {
        const auto [p, alpha] = space.resolve();
        const BettiVector b = twisted_betti(p, alpha, rank.options());
        const std::int64_t chi = b.euler_characteristic();
        const std::int64_t expected = p.euler_characteristic();
        const bool ok = chi == expected;
        if (json_) {
            out_ << json{{"space", p.describe()},
                         {"betti", betti_json(b)},
                         {"euler_characteristic", chi},
                         {"expected_euler_characteristic", expected},
                         {"euler_check", ok}}
                        .dump()
                 << '\n';
        } else {
            out_ << p.describe() << '\n';
            out_ << "b = " << to_string(b) << '\n';
            out_ << "chi: " << chi << " = " << expected << (ok ? " OK" : " MISMATCH") << '\n';
        }
        return ok ? 0 : 1;
    }

    int do_loop(const SpaceFlags& space, const RankFlags& rank, const std::string& text) {
        const auto [p, alpha] = space.resolve();
        const TwistedComplex c = build_complex(p, alpha);
        const Word w = parse_word(text, p);
        const CycleVector z = loop_cycle(w, alpha, c);
        const bool nonzero = class_is_nonzero(z, c, rank.options());
        json entries = json::array();
        for (const auto& e : z.entries) entries.push_back(to_string(e));
        if (json_) {
            out_ << json{{"word", to_string(w, p)}, {"cycle", entries}, {"nonzero", nonzero}}.dump() << '\n';
        } else {
            out_ << "word: " << to_string(w, p) << '\n';
            out_ << "cycle: (";
            for (std::size_t i = 0; i < entries.size(); ++i) out_ << (i ? ", " : "") << entries[i].get<std::string>();
            out_ << ")\n";
            out_ << "class: " << (nonzero ? "nonzero" : "zero") << '\n';
        }
        return 0;
    }

    int do_check(const PantsGraph& g) {
        const auto violations = validate(g);
        if (!violations.empty()) {
            if (json_) {
                json vs = json::array();
                for (const auto& v : violations) vs.push_back({{"rule", v.rule}, {"where", v.where}, {"message", v.message}});
                out_ << json{{"valid", false}, {"violations", vs}}.dump() << '\n';
            } else {
                out_ << "invalid\n";
                for (const auto& v : violations) out_ << "  [" << v.rule << "] " << v.where << ": " << v.message << '\n';
            }
            return 2;
        }
        const auto separating = separating_curves(g);
        const bool fashionable = is_fashionable(g);
        std::vector<std::string> null_curves;
        for (std::size_t c = 0; c < g.curves.size(); ++c) {
            if (is_zero_label(g.curves[c].ends[0].label)) null_curves.push_back(g.curves[c].name);
        }
        if (json_) {
            json sep = json::array();
            for (int c : separating) sep.push_back(g.curves[static_cast<std::size_t>(c)].name);
            out_ << json{{"valid", true}, {"separating", sep}, {"null_homologous", null_curves}, {"fashionable", fashionable}}
                        .dump()
                 << '\n';
            return 0;
        }
        out_ << "valid\n";
        out_ << "separating: " << names(g, separating) << '\n';
        if (fashionable) {
            out_ << "fashionable\n";
            return 0;
        }
        for (std::size_t c = 0; c < g.curves.size(); ++c) {
            if (!is_zero_label(g.curves[c].ends[0].label)) continue;
            out_ << "unfashionable: curve " << g.curves[c].name
                 << (curve_is_separating(g, static_cast<int>(c)) ? " separating" : " null-homologous") << '\n';
        }
        return 0;
    }

    int do_fashion(const PantsGraph& g, const std::string& output) {
        const FashionResult r = make_fashionable(g);
        json flips = json::array();
        PantsGraph step = g;
        for (const auto& f : r.flips) {
            flips.push_back(flip_json(step, f));
            step = tshirt_flip(step, f);
        }
        if (!output.empty()) {
            std::ofstream f(output, std::ios::binary);
            if (!f) throw ValidationError("cannot write '" + output + "'");
            f << write_pants(r.graph);
        }
        if (json_) {
            json j{{"flips", flips}};
            if (output.empty()) j["graph"] = pants_to_json(r.graph);
            out_ << j.dump() << '\n';
            return 0;
        }
        out_ << r.flips.size() << (r.flips.size() == 1 ? " flip" : " flips") << '\n';
        for (const auto& f : flips) {
            out_ << "  flip " << f["curve"].get<std::string>() << ": sleeves " << f["sleeve1"].get<std::string>()
                 << " | " << f["sleeve2"].get<std::string>() << '\n';
        }
        if (output.empty()) out_ << write_pants(r.graph);
        return 0;
    }

    int do_pochhammer(const PantsGraph& g, const RankFlags& rank) {
        require_valid(g);
        const Presentation p = surface_presentation(g.genus, g.punctures);
        const AlphaHom alpha = AlphaHom::hurewicz(p);
        const TwistedComplex c = build_complex(p, alpha);
        const auto vectors = pochhammer_vectors(g, p, alpha);
        json rows = json::array();
        for (int j = 0; j < g.num_pants(); ++j) {
            const auto& v = vectors[static_cast<std::size_t>(j)];
            json entries = json::array();
            for (const auto& e : v.entries) entries.push_back(to_string(e));
            rows.push_back({{"pants", g.pants_names[static_cast<std::size_t>(j)]},
                            {"word", to_string(pochhammer_word(g, j), p)},
                            {"vector", entries},
                            {"nonzero", class_is_nonzero(v, c, rank.options())}});
        }
        if (json_) {
            out_ << json{{"pants", rows}}.dump() << '\n';
            return 0;
        }
        for (const auto& row : rows) {
            out_ << row["pants"].get<std::string>() << ": " << row["word"].get<std::string>() << '\n';
            out_ << "  (";
            for (std::size_t i = 0; i < row["vector"].size(); ++i) {
                out_ << (i ? ", " : "") << row["vector"][i].get<std::string>();
            }
            out_ << ")\n  " << (row["nonzero"].get<bool>() ? "nonzero" : "zero") << '\n';
        }
        return 0;
    }

    int do_sew(const PantsGraph& g, const std::string& subset_text, const RankFlags& rank) {
        require_valid(g);
        const Presentation p = surface_presentation(g.genus, g.punctures);
        const AlphaHom alpha = AlphaHom::hurewicz(p);
        const TwistedComplex c = build_complex(p, alpha);
        const auto vectors = pants_cycles(g, alpha, c);
        const std::set<int> subset = parse_subset(subset_text, vectors.size());
        const std::size_t rk = sewing_rank(vectors, subset, c, rank.options());
        const bool fashionable = is_fashionable(g);
        if (json_) {
            out_ << json{{"subset", subset}, {"rank", rk}, {"fashionable", fashionable}}.dump() << '\n';
            return 0;
        }
        if (!fashionable) err_ << "warning: decomposition is not fashionable\n";
        out_ << "sewing rank " << rk << " of " << subset.size() << '\n';
        return 0;
    }

    std::ostream& out_;
    std::ostream& err_;
    bool json_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Runner(out, err).run(args);
}

}  // namespace pochhammer::cli
