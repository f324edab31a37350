#pragma once

// Pair-of-pants decompositions as trivalent multigraphs: pants are vertices,
// cut curves are edges (possibly loops), punctures are legs. Every boundary
// circle carries its class in H_1(surface; Z), oriented into its pants, and
// optionally a word in the surface group representing it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pochhammer/homology.hpp"
#include "pochhammer/words.hpp"

namespace pochhammer {

/// Class in H_1(surface; Z) in the basis a1,b1,...,ag,bg,c1,...,c(h-1).
using Label = std::vector<std::int64_t>;

bool is_zero_label(const Label& l);
Label operator+(const Label& a, const Label& b);
Label operator-(const Label& a);

struct CurveEnd {
    int pants = 0;
    Label label;
    std::optional<Word> word;
    friend bool operator==(const CurveEnd&, const CurveEnd&) = default;
};

struct Curve {
    std::string name;
    std::array<CurveEnd, 2> ends;
    bool is_loop() const noexcept { return ends[0].pants == ends[1].pants; }
    friend bool operator==(const Curve&, const Curve&) = default;
};

struct Leg {
    std::string name;
    int pants = 0;
    Label label;
    std::optional<Word> word;
    friend bool operator==(const Leg&, const Leg&) = default;
};

/// A boundary circle of some pants: one end of a curve, or a leg.
struct BoundaryRef {
    enum class Kind { CurveEnd, Leg };
    Kind kind = Kind::CurveEnd;
    int index = 0;
    int side = 0;  // curve end 0 or 1; unused for legs

    static BoundaryRef curve_end(int curve, int side) { return {Kind::CurveEnd, curve, side}; }
    static BoundaryRef leg(int l) { return {Kind::Leg, l, 0}; }
    friend bool operator==(const BoundaryRef&, const BoundaryRef&) = default;
};

struct PantsGraph {
    int genus = 0;
    int punctures = 0;
    std::vector<std::string> pants_names;
    std::vector<Curve> curves;
    std::vector<Leg> legs;

    int num_pants() const noexcept { return static_cast<int>(pants_names.size()); }
    /// 2g + max(h - 1, 0).
    std::size_t label_rank() const noexcept;
    bool is_closed() const noexcept { return punctures == 0; }

    /// Boundary circles of a pants: curve ends in curve order, then legs.
    std::vector<BoundaryRef> boundaries(int pants) const;
    int pants_of(const BoundaryRef& b) const;
    const Label& label(const BoundaryRef& b) const;
    const std::optional<Word>& word(const BoundaryRef& b) const;

    /// Index of the curve with this name; throws KeyError.
    int curve_index(std::string_view name) const;
    /// Edges minus vertices plus connected components (legs ignored).
    int first_betti_number() const;
    int num_components() const;

    friend bool operator==(const PantsGraph&, const PantsGraph&) = default;
};

std::string describe(const PantsGraph& g, const BoundaryRef& b);

struct Violation {
    std::string rule;   // degree, count, connected, betti, orientation, sum, word, label, index
    std::string where;  // "pants P0", "curve S", ...
    std::string message;
};

std::vector<Violation> validate(const PantsGraph& g);
/// Throws ValidationError listing every violation.
void require_valid(const PantsGraph& g);

/// Whether deleting the curve disconnects the graph. Loops never separate.
/// Throws KeyError for an unknown index.
bool curve_is_separating(const PantsGraph& g, int curve);
std::vector<int> separating_curves(const PantsGraph& g);

/// Every curve label is nonzero in H_1(surface; Z). Throws ValidationError
/// on an invalid graph, or, on a closed surface, when the answer disagrees
/// with the bridge test (labels that no embedding could produce).
bool is_fashionable(const PantsGraph& g);

/// Diagnostic for punctured surfaces: whether the curve's class vanishes
/// after capping the punctures (puncture coordinates dropped).
bool curve_is_null_capped(const PantsGraph& g, int curve);

struct FlipSpec {
    int curve = 0;
    BoundaryRef sleeve1;
    BoundaryRef sleeve2;
    friend bool operator==(const FlipSpec&, const FlipSpec&) = default;
};

/// T-shirt flip of a curve bounding two distinct pants. The four other
/// boundaries are regrouped so sleeve1 joins the non-sleeve boundary of
/// sleeve2's pants; the new curve's label is the sum of those two classes.
/// Throws FlipUnsupported for loops, InvalidFlipSpec for bad sleeves.
PantsGraph tshirt_flip(const PantsGraph& g, const FlipSpec& spec);

struct FashionResult {
    PantsGraph graph;
    std::vector<FlipSpec> flips;
};

/// Removes every null-homologous curve by flips: splits along a separating
/// null curve, fashions both sides, then flips the curve with the first
/// sleeve pair giving a nonzero class. Throws FashionObstruction when a null
/// curve is a loop or does not separate, or no sleeve pair works.
FashionResult make_fashionable(const PantsGraph& g);

/// Fashionable decomposition of the closed genus-g surface (g >= 2), decorated
/// with boundary words whose commutators are based coherently in each pants.
PantsGraph canonical_decomposition(int genus);

/// The chain decomposition obtained by cutting each handle off separately;
/// every pants is bounded by a null-homologous curve. Genus 2 gives the
/// dumbbell. Decorated like canonical_decomposition.
PantsGraph chain_decomposition(int genus);

/// The commutator of the first two decorated boundaries of a pants.
Word pochhammer_word(const PantsGraph& g, int pants);

/// Twisted cycles of every pants' Pochhammer word, without checking
/// fashionability. Throws UndecoratedGraph if a pants has fewer than two words.
std::vector<CycleVector> pants_cycles(const PantsGraph& g, const AlphaHom& alpha, const TwistedComplex& c);

/// Pochhammer vectors of a fashionable decorated decomposition. Throws
/// NotFashionable or UndecoratedGraph.
std::vector<CycleVector> pochhammer_vectors(const PantsGraph& g, const Presentation& p, const AlphaHom& alpha);

/// quotient_dim(d2, selected vectors). Throws KeyError for a bad index.
std::size_t sewing_rank(std::span<const CycleVector> vectors, const std::set<int>& subset, const TwistedComplex& c,
                        const RankOptions& opts = {});

/// Deterministic DOT rendering, parseable by parse_dot.
std::string export_dot(const PantsGraph& g);
/// Throws ParseError with a line number.
PantsGraph parse_dot(std::string_view text);

}  // namespace pochhammer
