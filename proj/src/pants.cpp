#include "pochhammer/pants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "pochhammer/errors.hpp"

namespace pochhammer {

bool is_zero_label(const Label& l) {
    return std::all_of(l.begin(), l.end(), [](std::int64_t v) { return v == 0; });
}

Label operator+(const Label& a, const Label& b) {
    if (a.size() != b.size()) throw ShapeError("labels of different rank");
    Label r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Label operator-(const Label& a) {
    Label r(a);
    for (auto& v : r) v = -v;
    return r;
}

namespace {

std::string label_text(const Label& l) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ')';
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- graph

std::size_t PantsGraph::label_rank() const noexcept {
    return static_cast<std::size_t>(2 * genus + std::max(punctures - 1, 0));
}

std::vector<BoundaryRef> PantsGraph::boundaries(int pants) const {
    std::vector<BoundaryRef> out;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        for (int s = 0; s < 2; ++s) {
            if (curves[c].ends[static_cast<std::size_t>(s)].pants == pants) {
                out.push_back(BoundaryRef::curve_end(static_cast<int>(c), s));
            }
        }
    }
    for (std::size_t l = 0; l < legs.size(); ++l) {
        if (legs[l].pants == pants) out.push_back(BoundaryRef::leg(static_cast<int>(l)));
    }
    return out;
}

int PantsGraph::pants_of(const BoundaryRef& b) const {
    if (b.kind == BoundaryRef::Kind::Leg) return legs.at(static_cast<std::size_t>(b.index)).pants;
    return curves.at(static_cast<std::size_t>(b.index)).ends.at(static_cast<std::size_t>(b.side)).pants;
}

const Label& PantsGraph::label(const BoundaryRef& b) const {
    if (b.kind == BoundaryRef::Kind::Leg) return legs.at(static_cast<std::size_t>(b.index)).label;
    return curves.at(static_cast<std::size_t>(b.index)).ends.at(static_cast<std::size_t>(b.side)).label;
}

const std::optional<Word>& PantsGraph::word(const BoundaryRef& b) const {
    if (b.kind == BoundaryRef::Kind::Leg) return legs.at(static_cast<std::size_t>(b.index)).word;
    return curves.at(static_cast<std::size_t>(b.index)).ends.at(static_cast<std::size_t>(b.side)).word;
}

int PantsGraph::curve_index(std::string_view name) const {
    for (std::size_t c = 0; c < curves.size(); ++c) {
        if (curves[c].name == name) return static_cast<int>(c);
    }
    throw KeyError("no curve named '" + std::string(name) + "'");
}

namespace {

// Connected components over pants, optionally ignoring one curve.
std::vector<int> component_ids(const PantsGraph& g, int skip_curve = -1) {
    const int n = g.num_pants();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::size_t c = 0; c < g.curves.size(); ++c) {
        if (static_cast<int>(c) == skip_curve) continue;
        const int a = find(g.curves[c].ends[0].pants);
        const int b = find(g.curves[c].ends[1].pants);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = find(v);
    return ids;
}

}  // namespace

int PantsGraph::num_components() const {
    auto ids = component_ids(*this);
    std::sort(ids.begin(), ids.end());
    return static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

int PantsGraph::first_betti_number() const {
    return static_cast<int>(curves.size()) - num_pants() + num_components();
}

std::string describe(const PantsGraph& g, const BoundaryRef& b) {
    if (b.kind == BoundaryRef::Kind::Leg) return "leg " + g.legs.at(static_cast<std::size_t>(b.index)).name;
    return "curve " + g.curves.at(static_cast<std::size_t>(b.index)).name + " end " + std::to_string(b.side);
}

// ---------------------------------------------------------------- validation

std::vector<Violation> validate(const PantsGraph& g) {
    std::vector<Violation> out;
    auto add = [&](std::string rule, std::string where, std::string msg) {
        out.push_back(Violation{std::move(rule), std::move(where), std::move(msg)});
    };
    const int n = g.num_pants();
    for (const auto& c : g.curves) {
        for (const auto& e : c.ends) {
            if (e.pants < 0 || e.pants >= n) add("index", "curve " + c.name, "endpoint refers to a missing pants");
        }
    }
    for (const auto& l : g.legs) {
        if (l.pants < 0 || l.pants >= n) add("index", "leg " + l.name, "attached to a missing pants");
    }
    if (g.genus < 0 || g.punctures < 0) add("count", "surface", "negative genus or puncture count");
    if (!out.empty()) return out;

    const std::size_t rank = g.label_rank();
    const int expected_pants = 2 * g.genus - 2 + g.punctures;
    const int expected_curves = 3 * g.genus - 3 + g.punctures;
    if (n != expected_pants) {
        add("count", "surface",
            "expected " + std::to_string(expected_pants) + " pants, found " + std::to_string(n));
    }
    if (static_cast<int>(g.curves.size()) != expected_curves) {
        add("count", "surface",
            "expected " + std::to_string(expected_curves) + " curves, found " + std::to_string(g.curves.size()));
    }
    if (static_cast<int>(g.legs.size()) != g.punctures) {
        add("count", "surface",
            "expected " + std::to_string(g.punctures) + " legs, found " + std::to_string(g.legs.size()));
    }
    if (n > 0 && g.num_components() != 1) add("connected", "surface", "the pants graph is disconnected");
    if (g.first_betti_number() != g.genus) {
        add("betti", "surface",
            "graph first Betti number is " + std::to_string(g.first_betti_number()) + ", expected the genus " +
                std::to_string(g.genus));
    }

    bool labels_ok = true;
    for (const auto& c : g.curves) {
        for (const auto& e : c.ends) {
            if (e.label.size() != rank) {
                add("label", "curve " + c.name,
                    "label has rank " + std::to_string(e.label.size()) + ", expected " + std::to_string(rank));
                labels_ok = false;
            }
        }
    }
    for (const auto& l : g.legs) {
        if (l.label.size() != rank) {
            add("label", "leg " + l.name,
                "label has rank " + std::to_string(l.label.size()) + ", expected " + std::to_string(rank));
            labels_ok = false;
        }
    }

    for (int p = 0; p < n; ++p) {
        const auto bs = g.boundaries(p);
        if (bs.size() != 3) {
            add("degree", "pants " + g.pants_names[static_cast<std::size_t>(p)],
                "has " + std::to_string(bs.size()) + " boundary circles, expected 3");
        }
        if (labels_ok) {
            Label sum(rank, 0);
            for (const auto& b : bs) sum = sum + g.label(b);
            if (!is_zero_label(sum)) {
                add("sum", "pants " + g.pants_names[static_cast<std::size_t>(p)],
                    "boundary labels sum to " + label_text(sum) + " instead of zero");
            }
        }
    }
    if (labels_ok) {
        for (const auto& c : g.curves) {
            if (c.ends[0].label + c.ends[1].label != Label(rank, 0)) {
                add("orientation", "curve " + c.name, "end labels are not opposite");
            }
        }
    }

    // Words are in the standard surface presentation, where the Hurewicz map
    // is the identity in the label basis.
    if (labels_ok && !(g.genus == 0 && g.punctures <= 1)) {
        const Presentation pres = surface_presentation(g.genus, g.punctures);
        const AlphaHom hur = AlphaHom::hurewicz(pres);
        auto check_word = [&](const std::optional<Word>& w, const Label& l, const std::string& where) {
            if (!w) return;
            for (const auto& letter : w->letters()) {
                if (letter.generator < 0 || letter.generator >= pres.num_generators()) {
                    add("word", where, "word uses a generator outside the surface presentation");
                    return;
                }
            }
            if (abelianize(hur, *w) != l) add("word", where, "word abelianizes to a different class than its label");
        };
        for (const auto& c : g.curves) {
            for (int s = 0; s < 2; ++s) {
                check_word(c.ends[static_cast<std::size_t>(s)].word, c.ends[static_cast<std::size_t>(s)].label,
                           "curve " + c.name + " end " + std::to_string(s));
            }
        }
        for (const auto& l : g.legs) check_word(l.word, l.label, "leg " + l.name);
    }
    return out;
}

void require_valid(const PantsGraph& g) {
    const auto v = validate(g);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid pants graph:";
    for (const auto& x : v) os << "\n  [" << x.rule << "] " << x.where << ": " << x.message;
    throw ValidationError(os.str());
}

bool curve_is_separating(const PantsGraph& g, int curve) {
    if (curve < 0 || static_cast<std::size_t>(curve) >= g.curves.size()) {
        throw KeyError("no curve with index " + std::to_string(curve));
    }
    const auto& c = g.curves[static_cast<std::size_t>(curve)];
    if (c.is_loop()) return false;
    const auto ids = component_ids(g, curve);
    return ids[static_cast<std::size_t>(c.ends[0].pants)] != ids[static_cast<std::size_t>(c.ends[1].pants)];
}

std::vector<int> separating_curves(const PantsGraph& g) {
    std::vector<int> out;
    for (std::size_t c = 0; c < g.curves.size(); ++c) {
        if (curve_is_separating(g, static_cast<int>(c))) out.push_back(static_cast<int>(c));
    }
    return out;
}

bool is_fashionable(const PantsGraph& g) {
    require_valid(g);
    bool all_nonzero = true;
    for (const auto& c : g.curves) all_nonzero = all_nonzero && !is_zero_label(c.ends[0].label);
    if (g.is_closed()) {
        const bool bridgeless = separating_curves(g).empty();
        if (bridgeless != all_nonzero) {
            for (std::size_t c = 0; c < g.curves.size(); ++c) {
                const bool zero = is_zero_label(g.curves[c].ends[0].label);
                if (zero != curve_is_separating(g, static_cast<int>(c))) {
                    throw ValidationError("labels inconsistent with an embedding: curve " + g.curves[c].name +
                                          (zero ? " is non-separating but null-homologous"
                                                : " is separating but homologically nontrivial"));
                }
            }
        }
    }
    return all_nonzero;
}

bool curve_is_null_capped(const PantsGraph& g, int curve) {
    if (curve < 0 || static_cast<std::size_t>(curve) >= g.curves.size()) {
        throw KeyError("no curve with index " + std::to_string(curve));
    }
    const Label& l = g.curves[static_cast<std::size_t>(curve)].ends[0].label;
    const auto handles = static_cast<std::size_t>(2 * g.genus);
    return std::all_of(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(std::min(handles, l.size())),
                       [](std::int64_t v) { return v == 0; });
}

// ---------------------------------------------------------------- flips

namespace {

void set_pants(PantsGraph& g, const BoundaryRef& b, int pants) {
    if (b.kind == BoundaryRef::Kind::Leg) {
        g.legs[static_cast<std::size_t>(b.index)].pants = pants;
    } else {
        g.curves[static_cast<std::size_t>(b.index)].ends[static_cast<std::size_t>(b.side)].pants = pants;
    }
}

bool refers_to(const PantsGraph& g, const BoundaryRef& b) {
    if (b.kind == BoundaryRef::Kind::Leg) return b.index >= 0 && static_cast<std::size_t>(b.index) < g.legs.size();
    return b.index >= 0 && static_cast<std::size_t>(b.index) < g.curves.size() && (b.side == 0 || b.side == 1);
}

// The boundary of `pants` other than the two given ones.
BoundaryRef third_boundary(const PantsGraph& g, int pants, const BoundaryRef& x, const BoundaryRef& y) {
    for (const auto& b : g.boundaries(pants)) {
        if (b != x && b != y) return b;
    }
    throw InvalidFlipSpec("pants " + g.pants_names[static_cast<std::size_t>(pants)] + " is not trivalent");
}

}  // namespace

PantsGraph tshirt_flip(const PantsGraph& g, const FlipSpec& spec) {
    if (spec.curve < 0 || static_cast<std::size_t>(spec.curve) >= g.curves.size()) {
        throw KeyError("no curve with index " + std::to_string(spec.curve));
    }
    const Curve& s = g.curves[static_cast<std::size_t>(spec.curve)];
    if (s.is_loop()) throw FlipUnsupported("curve " + s.name + " bounds the same pants on both sides");
    if (!refers_to(g, spec.sleeve1) || !refers_to(g, spec.sleeve2)) throw InvalidFlipSpec("sleeve does not exist");
    const BoundaryRef s0 = BoundaryRef::curve_end(spec.curve, 0);
    const BoundaryRef s1 = BoundaryRef::curve_end(spec.curve, 1);
    for (const auto& sl : {spec.sleeve1, spec.sleeve2}) {
        if (sl == s0 || sl == s1) throw InvalidFlipSpec("a sleeve cannot be the flipped curve itself");
    }
    if (spec.sleeve1 == spec.sleeve2) throw InvalidFlipSpec("the two sleeves must differ");

    const int p1 = g.pants_of(spec.sleeve1);
    const int p2 = g.pants_of(spec.sleeve2);
    const int pa = s.ends[0].pants, pb = s.ends[1].pants;
    if ((p1 != pa && p1 != pb) || (p2 != pa && p2 != pb)) {
        throw InvalidFlipSpec("sleeves must bound the two pants adjacent to curve " + s.name);
    }
    if (p1 == p2) throw InvalidFlipSpec("both sleeves lie in the same pants; they must end on opposite sides");

    const BoundaryRef end1 = p1 == pa ? s0 : s1;  // end of S in sleeve1's pants
    const BoundaryRef end2 = p1 == pa ? s1 : s0;
    const BoundaryRef x = third_boundary(g, p2, spec.sleeve2, end2);  // joins sleeve1
    const BoundaryRef y = third_boundary(g, p1, spec.sleeve1, end1);  // joins sleeve2

    PantsGraph out = g;
    set_pants(out, x, p1);
    set_pants(out, y, p2);

    const Label grouped = g.label(spec.sleeve1) + g.label(x);
    Curve& ns = out.curves[static_cast<std::size_t>(spec.curve)];
    CurveEnd& at1 = ns.ends[static_cast<std::size_t>(end1.side)];
    CurveEnd& at2 = ns.ends[static_cast<std::size_t>(end2.side)];
    at1.label = -grouped;
    at2.label = grouped;

    const auto& w1 = g.word(spec.sleeve1);
    const auto& wx = g.word(x);
    const bool decorated = w1 && wx && g.word(spec.sleeve2) && g.word(y);
    if (decorated) {
        const Word product = (*w1 * *wx).reduced();
        at2.word = product;
        at1.word = product.inverse();
    } else {
        at1.word.reset();
        at2.word.reset();
    }
    return out;
}

// ---------------------------------------------------------------- fashion

namespace {

class Fashioner {
public:
    explicit Fashioner(PantsGraph g) : g_(std::move(g)) {}

    FashionResult run() {
        std::vector<int> all(static_cast<std::size_t>(g_.num_pants()));
        std::iota(all.begin(), all.end(), 0);
        fashion(all);
        return FashionResult{std::move(g_), std::move(flips_)};
    }

private:
    void fashion(const std::vector<int>& region) {
        std::vector<char> inside(static_cast<std::size_t>(g_.num_pants()), 0);
        for (int v : region) inside[static_cast<std::size_t>(v)] = 1;
        auto in = [&](int v) { return inside[static_cast<std::size_t>(v)] != 0; };

        int target = -1;
        for (std::size_t c = 0; c < g_.curves.size(); ++c) {
            const auto& cv = g_.curves[c];
            if (in(cv.ends[0].pants) && in(cv.ends[1].pants) && is_zero_label(cv.ends[0].label)) {
                target = static_cast<int>(c);
                break;
            }
        }
        if (target < 0) return;
        const Curve& s = g_.curves[static_cast<std::size_t>(target)];
        if (s.is_loop()) throw FashionObstruction("curve " + s.name + " is a null-homologous loop");

        // Side of the first endpoint within the region, with the curve removed.
        std::vector<char> side(inside.size(), 0);
        std::vector<int> stack{s.ends[0].pants};
        side[static_cast<std::size_t>(s.ends[0].pants)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (std::size_t c = 0; c < g_.curves.size(); ++c) {
                if (static_cast<int>(c) == target) continue;
                const auto& cv = g_.curves[c];
                for (int e = 0; e < 2; ++e) {
                    if (cv.ends[static_cast<std::size_t>(e)].pants != v) continue;
                    const int w = cv.ends[static_cast<std::size_t>(1 - e)].pants;
                    if (in(w) && !side[static_cast<std::size_t>(w)]) {
                        side[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
                }
            }
        }
        if (side[static_cast<std::size_t>(s.ends[1].pants)]) {
            throw FashionObstruction("curve " + s.name + " is null-homologous but does not separate");
        }
        std::vector<int> left, right;
        for (int v : region) (side[static_cast<std::size_t>(v)] ? left : right).push_back(v);
        fashion(left);
        fashion(right);
        flip_nonzero(target);
    }

    void flip_nonzero(int target) {
        const Curve s = g_.curves[static_cast<std::size_t>(target)];
        const int p1 = s.ends[0].pants, p2 = s.ends[1].pants;
        const BoundaryRef e1 = BoundaryRef::curve_end(target, 0), e2 = BoundaryRef::curve_end(target, 1);
        for (const auto& sl1 : g_.boundaries(p1)) {
            if (sl1 == e1) continue;
            for (const auto& sl2 : g_.boundaries(p2)) {
                if (sl2 == e2) continue;
                const BoundaryRef x = third_boundary(g_, p2, sl2, e2);
                if (is_zero_label(g_.label(sl1) + g_.label(x))) continue;
                const FlipSpec spec{target, sl1, sl2};
                g_ = tshirt_flip(g_, spec);
                flips_.push_back(spec);
                return;
            }
        }
        throw FashionObstruction("no sleeve pair makes curve " + s.name + " homologically nontrivial");
    }

    PantsGraph g_;
    std::vector<FlipSpec> flips_;
};

}  // namespace

FashionResult make_fashionable(const PantsGraph& g) {
    require_valid(g);
    if (2 - 2 * g.genus - g.punctures >= 0) throw DomainError("pants decompositions need negative Euler characteristic");
    return Fashioner(g).run();
}

// ---------------------------------------------------------------- canonical

namespace {

struct Hole {
    int handle = 0;     // zero-based handle index
    bool plus = true;   // A_i^+ (class a_i) or A_i^- (class -a_i)
    Word lasso;
};

// Decorated caterpillar decomposition of the 2g-holed sphere obtained by
// cutting along the meridians a_i, with holes in the given order. Starting
// from the standard lasso system (A1+, A1-, A2+, A2-, ...), whose product is
// the surface relator, holes are moved into place by Hurwitz moves
// (l, l') -> (l', l'^-1 l l'), which keep the lasso product and the
// geometric realisability of the system.
PantsGraph caterpillar(int genus, const std::vector<std::pair<int, bool>>& order) {
    if (genus < 2) throw DomainError("closed decompositions need genus >= 2");
    const int holes = 2 * genus;
    std::vector<Hole> seq;
    for (int i = 0; i < genus; ++i) {
        const Word a = Word::generator(2 * i), b = Word::generator(2 * i + 1);
        seq.push_back(Hole{i, true, a});
        seq.push_back(Hole{i, false, (b * a.inverse() * b.inverse())});
    }
    for (int target = 0; target < holes; ++target) {
        int pos = target;
        while (seq[static_cast<std::size_t>(pos)].handle != order[static_cast<std::size_t>(target)].first ||
               seq[static_cast<std::size_t>(pos)].plus != order[static_cast<std::size_t>(target)].second) {
            ++pos;
        }
        for (; pos > target; --pos) {
            Hole& left = seq[static_cast<std::size_t>(pos - 1)];
            Hole& right = seq[static_cast<std::size_t>(pos)];
            Word conj = (right.lasso.inverse() * left.lasso * right.lasso).reduced();
            std::swap(left, right);
            right.lasso = std::move(conj);
        }
    }

    const Presentation pres = surface_presentation(genus, 0);
    const AlphaHom hur = AlphaHom::hurewicz(pres);
    auto label_of = [&](const Word& w) { return abelianize(hur, w); };

    const int num_pants = 2 * genus - 2;
    auto pants_of_hole = [&](int p) { return std::max(0, std::min(p - 1, num_pants - 1)); };

    PantsGraph g;
    g.genus = genus;
    g.punctures = 0;
    for (int j = 0; j < num_pants; ++j) g.pants_names.push_back("P" + std::to_string(j + 1));

    // Meridian curves A1..Ag join the holes A_i^+ and A_i^-.
    for (int i = 0; i < genus; ++i) {
        Curve c;
        c.name = "A" + std::to_string(i + 1);
        for (int p = 0; p < holes; ++p) {
            const Hole& h = seq[static_cast<std::size_t>(p)];
            if (h.handle != i) continue;
            CurveEnd& e = c.ends[h.plus ? 0 : 1];
            e.pants = pants_of_hole(p);
            e.word = h.lasso;
            e.label = label_of(h.lasso);
        }
        g.curves.push_back(std::move(c));
    }
    // Spine curves G_k enclose the first k+1 holes.
    Word prefix = seq[0].lasso;
    for (int k = 1; k <= num_pants - 1; ++k) {
        prefix = (prefix * seq[static_cast<std::size_t>(k)].lasso).reduced();
        Curve c;
        c.name = "G" + std::to_string(k);
        c.ends[0] = CurveEnd{k - 1, -label_of(prefix), prefix.inverse()};
        c.ends[1] = CurveEnd{k, label_of(prefix), prefix};
        g.curves.push_back(std::move(c));
    }
    return g;
}

}  // namespace

PantsGraph canonical_decomposition(int genus) {
    if (genus < 2) throw DomainError("canonical decompositions need genus >= 2");
    // A1+, ..., Ag+, A1-, ..., Ag-: every spine curve encloses a nonzero sum
    // of meridian classes.
    std::vector<std::pair<int, bool>> order;
    for (int i = 0; i < genus; ++i) order.emplace_back(i, true);
    for (int i = 0; i < genus; ++i) order.emplace_back(i, false);
    return caterpillar(genus, order);
}

PantsGraph chain_decomposition(int genus) {
    if (genus < 2) throw DomainError("chain decompositions need genus >= 2");
    std::vector<std::pair<int, bool>> order;
    for (int i = 0; i < genus; ++i) {
        order.emplace_back(i, true);
        order.emplace_back(i, false);
    }
    return caterpillar(genus, order);
}

// ---------------------------------------------------------------- Pochhammer

Word pochhammer_word(const PantsGraph& g, int pants) {
    std::vector<Word> words;
    for (const auto& b : g.boundaries(pants)) {
        if (const auto& w = g.word(b)) words.push_back(*w);
        if (words.size() == 2) break;
    }
    if (words.size() < 2) {
        throw UndecoratedGraph("pants " + g.pants_names.at(static_cast<std::size_t>(pants)) +
                               " has fewer than two boundary words");
    }
    return commutator(words[0], words[1]).reduced();
}

std::vector<CycleVector> pants_cycles(const PantsGraph& g, const AlphaHom& alpha, const TwistedComplex& c) {
    std::vector<CycleVector> out;
    for (int j = 0; j < g.num_pants(); ++j) out.push_back(loop_cycle(pochhammer_word(g, j), alpha, c));
    return out;
}

std::vector<CycleVector> pochhammer_vectors(const PantsGraph& g, const Presentation& p, const AlphaHom& alpha) {
    if (!is_fashionable(g)) throw NotFashionable("the decomposition has a null-homologous curve");
    return pants_cycles(g, alpha, build_complex(p, alpha));
}

std::size_t sewing_rank(std::span<const CycleVector> vectors, const std::set<int>& subset, const TwistedComplex& c,
                        const RankOptions& opts) {
    MatrixF cols(static_cast<std::size_t>(c.m), subset.size(), c.nvars);
    std::size_t col = 0;
    for (int j : subset) {
        if (j < 0 || static_cast<std::size_t>(j) >= vectors.size()) {
            throw KeyError("no Pochhammer vector with index " + std::to_string(j));
        }
        const auto& v = vectors[static_cast<std::size_t>(j)];
        if (v.entries.size() != static_cast<std::size_t>(c.m)) throw ShapeError("cycle has the wrong length");
        for (std::size_t r = 0; r < v.entries.size(); ++r) cols.set(r, col, v.entries[r]);
        ++col;
    }
    if (subset.empty()) return 0;
    return quotient_dim(c.d2, cols, opts);
}

}  // namespace pochhammer
