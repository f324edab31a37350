// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "pochhammer/cli.hpp"
#include "pochhammer/homology.hpp"
#include "pochhammer/pants.hpp"
#include "pochhammer/pants_io.hpp"

using namespace pochhammer;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) notes << " first failure: " << what;
            ok = false;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RankOptions exact() {
    RankOptions o;
    o.backend = RankBackend::Exact;
    return o;
}

BettiVector B(std::vector<std::int64_t> v) { return BettiVector{std::move(v)}; }

void atiyah(Check& c) {
    for (int g = 2; g <= 5; ++g) {
        const std::int64_t want = 2 * g - 2;
        for (const bool use_exact : {false, true}) {
            std::vector<std::string> args{"betti", "--genus", std::to_string(g), "--json"};
            if (use_exact) args.push_back("--exact");
            std::ostringstream out, err;
            const auto t0 = Clock::now();
            const int code = cli::run(args, out, err);
            const double dt = seconds_since(t0);
            const auto doc = parse_json(out.str());
            const bool match = code == 0 && doc["betti"].get<std::vector<std::int64_t>>() == std::vector<std::int64_t>{0, want, 0};
            const std::string tag = "g=" + std::to_string(g) + (use_exact ? " exact" : " randomized");
            c.expect(match, tag + " betti");
            c.expect(dt < (use_exact ? 60.0 : 5.0), tag + " time");
            char buf[64];
            std::snprintf(buf, sizeof buf, " %s %.2fs", tag.c_str(), dt);
            c.notes << buf;
        }
    }
}

void euler(Check& c) {
    gen::Rng rng(1001);
    const std::pair<int, int> surfaces[] = {{2, 0}, {3, 0}, {1, 1}, {0, 3}, {2, 1}};
    for (const auto& [g, h] : surfaces) {
        const Presentation p = surface_presentation(g, h);
        for (int i = 0; i < 50; ++i) {
            const AlphaHom a = gen::alpha(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
            c.expect(twisted_betti(p, a).euler_characteristic() == 2 - 2 * g - h,
                     "(g,h)=(" + std::to_string(g) + "," + std::to_string(h) + ")");
        }
    }
}

// Calls f on every rows x cols integer matrix with entries in [lo, hi].
void for_each_matrix(std::size_t rows, std::size_t cols, int lo, int hi, const std::function<void(const IntMatrix&)>& f) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < cols; ++k) m(r, k) = lo;
    }
    while (true) {
        f(m);
        std::size_t i = 0;
        for (; i < rows * cols; ++i) {
            auto& x = m(i / cols, i % cols);
            if (x < hi) {
                ++x;
                break;
            }
            x = lo;
        }
        if (i == rows * cols) return;
    }
}

bool is_zero(const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (m(r, k) != 0) return false;
        }
    }
    return true;
}

void circle_wedge(Check& c) {
    const Presentation s1 = circle_presentation();
    const Presentation w = wedge_presentation();
    int cases = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        for_each_matrix(n, 1, -2, 2, [&](const IntMatrix& m) {
            c.expect(twisted_betti(s1, AlphaHom(s1, m)) == (is_zero(m) ? B({1, 1}) : B({0, 0})), "circle");
            ++cases;
        });
        for_each_matrix(n, 2, -2, 2, [&](const IntMatrix& m) {
            c.expect(twisted_betti(w, AlphaHom(w, m)) == (is_zero(m) ? B({1, 2}) : B({0, 1})), "wedge");
            ++cases;
        });
    }
    for (int m : {2, 3}) {
        c.expect(twisted_betti(s1, AlphaHom(s1, IntMatrix::from_rows({{m}}, 1)), exact()) == B({0, 0}), "mZ");
        ++cases;
    }
    c.notes << ' ' << cases << " homomorphisms";
}

void reduction(Check& c) {
    gen::Rng rng(1004);
    const std::pair<int, int> surfaces[] = {{2, 0}, {1, 1}, {3, 0}, {0, 3}};
    for (int i = 0; i < 20; ++i) {
        const auto [g, h] = surfaces[i % 4];
        const Presentation p = surface_presentation(g, h);
        const std::size_t k = static_cast<std::size_t>(1 + i % 3);
        const AlphaHom inner = gen::alpha(rng, p, k);
        const IntMatrix inc = gen::inclusion(rng, k + static_cast<std::size_t>(gen::uniform(rng, 0, 2)), k);
        const AlphaHom outer = AlphaHom::compose(inc, inner, p);
        c.expect(twisted_betti(p, inner).dims == twisted_betti(p, outer).dims, "factored alpha " + std::to_string(i));
        c.expect(reduction_check(p, inner, inc), "reduction_check " + std::to_string(i));
    }
}

void sewing(Check& c) {
    for (int g : {2, 3}) {
        const PantsGraph pg = canonical_decomposition(g);
        const Presentation p = surface_presentation(g, 0);
        const AlphaHom h = AlphaHom::hurewicz(p);
        const TwistedComplex cx = build_complex(p, h);
        const auto v = pochhammer_vectors(pg, p, h);
        c.expect(v.size() == static_cast<std::size_t>(2 * g - 2), "vector count");
        for (const auto& z : v) c.expect(class_is_nonzero(z, cx, exact()), "nonzero cycle");
        const int n = static_cast<int>(v.size());
        std::size_t full = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::set<int> subset;
            for (int j = 0; j < n; ++j) {
                if (mask & (1 << j)) subset.insert(j);
            }
            const std::size_t r = sewing_rank(v, subset, cx, exact());
            c.expect(r == subset.size(), "subset rank");
            if (mask == (1 << n) - 1) full = r;
        }
        c.notes << " g=" << g << " full rank " << full;
    }
}

void dumbbell(Check& c) {
    const PantsGraph d = parse_pants(read_file(POCHH_DATA_DIR "/dumbbell.json"));
    const Presentation p = surface_presentation(2, 0);
    const AlphaHom h = AlphaHom::hurewicz(p);
    const TwistedComplex cx = build_complex(p, h);
    const auto v = pants_cycles(d, h, cx);
    c.expect(v.size() == 2, "two vectors");
    const std::size_t r = quotient_dim(cx.d2, v[0].as_column(4).hconcat(v[1].as_column(4)), exact());
    c.expect(r <= 1, "quotient_dim");
    c.notes << " quotient_dim " << r;
}

void check_flip_invariants(Check& c, const PantsGraph& before, const PantsGraph& after) {
    std::multiset<Label> a, b;
    for (const auto& l : before.legs) a.insert(l.label);
    for (const auto& l : after.legs) b.insert(l.label);
    c.expect(after.num_pants() == before.num_pants(), "vertex count");
    c.expect(a == b, "leg labels");
    c.expect(after.first_betti_number() == before.first_betti_number(), "first Betti number");
}

void fashion(Check& c) {
    const PantsGraph d = parse_pants(read_file(POCHH_DATA_DIR "/dumbbell.json"));
    const auto rd = make_fashionable(d);
    c.expect(rd.flips.size() == 1 && is_fashionable(rd.graph), "dumbbell in one flip");

    gen::Rng rng(1007);
    int fashioned = 0, obstructed = 0, flips = 0;
    for (int i = 0; i < 100; ++i) {
        const PantsGraph g = gen::random_closed_graph(rng, 3);
        c.expect(validate(g).empty(), "valid random graph");
        try {
            const auto r = make_fashionable(g);
            c.expect(is_fashionable(r.graph), "fashioned output");
            PantsGraph cur = g;
            for (const auto& f : r.flips) {
                const PantsGraph next = tshirt_flip(cur, f);
                check_flip_invariants(c, cur, next);
                cur = next;
                ++flips;
            }
            c.expect(cur == r.graph, "replayed flips");
            ++fashioned;
        } catch (const FashionObstruction&) {
            ++obstructed;
        }
        // Every flip the graph admits, whether or not the algorithm uses it.
        for (std::size_t k = 0; k < g.curves.size(); ++k) {
            if (g.curves[k].is_loop()) continue;
            const int ci = static_cast<int>(k);
            const auto s1 = g.boundaries(g.curves[k].ends[0].pants);
            const auto s2 = g.boundaries(g.curves[k].ends[1].pants);
            for (const auto& a : s1) {
                if (a == BoundaryRef::curve_end(ci, 0)) continue;
                for (const auto& b : s2) {
                    if (b == BoundaryRef::curve_end(ci, 1)) continue;
                    const PantsGraph f = tshirt_flip(g, FlipSpec{ci, a, b});
                    c.expect(validate(f).empty(), "flip output valid");
                    check_flip_invariants(c, g, f);
                    ++flips;
                }
            }
        }
    }
    c.expect(fashioned + obstructed == 100, "all graphs handled");
    c.notes << ' ' << fashioned << " fashioned, " << obstructed << " obstructed, " << flips << " flips checked";
}

void moduli(Check& c) {
    for (int g : {2, 3}) {
        for (int r : {1, 2, 3}) {
            const BettiVector b = vortex_betti(g, r);
            for (int i = 0; i <= 2 * r + 1; ++i) {
                const bool odd = i % 2 == 1 && i <= 2 * r - 1;
                c.expect(b[static_cast<std::size_t>(i)] == (odd ? 2 * g - 2 : 0), "vortex pattern");
            }
            c.expect(b.euler_characteristic() == r * (2 - 2 * g), "vortex euler");
        }
        for (int k = 1; k <= 6; ++k) {
            const BettiVector b = symk_betti(g, k);
            for (int i = 0; i <= 2 * k; ++i) {
                c.expect(b[static_cast<std::size_t>(i)] == (i == k ? oracle::binomial(2 * g - 2, k) : 0), "symk");
            }
        }
    }
}

void backends(Check& c) {
    gen::Rng rng(1009);
    for (int i = 0; i < 100; ++i) {
        const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        const MatrixF m = i % 3 == 0 ? gen::low_rank_matrix(rng, rows, cols, static_cast<std::size_t>(gen::uniform(rng, 1, 4)), n)
                                     : gen::matrix(rng, rows, cols, n, 2, 0.5);
        c.expect(rank_randomized(m, 2, static_cast<std::uint64_t>(i)) == rank_exact(m), "matrix " + std::to_string(i));
    }
    for (int i = 0; i < 200; ++i) {
        const Presentation p = surface_presentation(gen::uniform(rng, 1, 3), gen::uniform(rng, 0, 2));
        const AlphaHom a = gen::alpha(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 4)));
        const Word w = gen::word(rng, p.num_generators(), 20);
        const LaurentPoly one = LaurentPoly::constant(a.target_rank(), 1);
        LaurentPoly lhs(a.target_rank());
        for (int j = 0; j < p.num_generators(); ++j) lhs += fox_derivative_poly(w, j, a) * (a.generator_monomial(j) - one);
        c.expect(lhs == monomial_of(a, w) - one, "Fox identity " + std::to_string(i));
    }
}

}  // namespace

int main() {
    const std::pair<const char*, void (*)(Check&)> criteria[] = {
        {"Atiyah numbers", atiyah},
        {"Euler identity", euler},
        {"circle and wedge", circle_wedge},
        {"reduction property", reduction},
        {"Pochhammer vectors and sewing", sewing},
        {"dumbbell failure mode", dumbbell},
        {"fashion algorithm", fashion},
        {"moduli formulas", moduli},
        {"backend equivalence", backends},
    };
    int failures = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        const auto t0 = Clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, " [%.2fs]", seconds_since(t0));
        std::cout << (c.ok ? "PASS" : "FAIL") << ' ' << ++index << ' ' << name << ':' << c.notes.str() << buf << std::endl;
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
