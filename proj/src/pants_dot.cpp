#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "pochhammer/errors.hpp"
#include "pochhammer/pants.hpp"

namespace pochhammer {

namespace {

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string label_value(const Label& l) {
    std::string out;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(l[i]);
    }
    return out;
}

std::optional<Presentation> presentation_for(const PantsGraph& g) {
    if (g.genus < 0 || g.punctures < 0 || (g.genus == 0 && g.punctures <= 1)) return std::nullopt;
    return surface_presentation(g.genus, g.punctures);
}

std::string leg_node(const Leg& l) { return "leg:" + l.name; }

}  // namespace

std::string export_dot(const PantsGraph& g) {
    const auto pres = presentation_for(g);
    auto word_text = [&](const std::optional<Word>& w) { return pres ? to_string(*w, *pres) : std::string(); };
    const auto separating = separating_curves(g);

    std::ostringstream os;
    os << "graph pants {\n";
    os << "  graph [genus=" << g.genus << ", punctures=" << g.punctures << "];\n";
    for (const auto& name : g.pants_names) os << "  " << quote(name) << " [shape=circle];\n";
    for (const auto& l : g.legs) os << "  " << quote(leg_node(l)) << " [shape=point];\n";
    for (std::size_t c = 0; c < g.curves.size(); ++c) {
        const Curve& cv = g.curves[c];
        const bool sep = std::find(separating.begin(), separating.end(), static_cast<int>(c)) != separating.end();
        os << "  " << quote(g.pants_names.at(static_cast<std::size_t>(cv.ends[0].pants))) << " -- "
           << quote(g.pants_names.at(static_cast<std::size_t>(cv.ends[1].pants))) << " [name=" << quote(cv.name)
           << ", label0=" << quote(label_value(cv.ends[0].label)) << ", label1=" << quote(label_value(cv.ends[1].label));
        for (int s = 0; s < 2; ++s) {
            const auto& w = cv.ends[static_cast<std::size_t>(s)].word;
            if (w && pres) os << ", word" << s << '=' << quote(word_text(w));
        }
        os << ", separating=" << (sep ? "true" : "false") << "];\n";
    }
    for (const auto& l : g.legs) {
        os << "  " << quote(g.pants_names.at(static_cast<std::size_t>(l.pants))) << " -- " << quote(leg_node(l))
           << " [leg=true, name=" << quote(l.name) << ", label=" << quote(label_value(l.label));
        if (l.word && pres) os << ", word=" << quote(word_text(l.word));
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

class DotLine {
public:
    DotLine(std::string_view text, int line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    std::string identifier_or_string() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of line");
        std::string out;
        if (text_[pos_] == '"') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                out += text_[pos_++];
            }
            if (pos_ >= text_.size()) fail("unterminated string");
            ++pos_;
            return out;
        }
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-')) {
            out += text_[pos_++];
        }
        if (out.empty()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return out;
    }
    std::map<std::string, std::string> attributes() {
        std::map<std::string, std::string> out;
        if (!accept("[")) return out;
        if (accept("]")) return out;
        do {
            std::string key = identifier_or_string();
            expect("=");
            out[key] = identifier_or_string();
        } while (accept(","));
        expect("]");
        return out;
    }
    void finish() {
        accept(";");
        if (!at_end()) fail("trailing text");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

int parse_int(const DotLine& ln, const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) ln.fail("expected an integer, found '" + s + "'");
    return v;
}

Label parse_label(const DotLine& ln, const std::string& s) {
    Label out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size()) ln.fail("bad label component '" + part + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

const std::string& require(const DotLine& ln, const std::map<std::string, std::string>& attrs, const char* key) {
    const auto it = attrs.find(key);
    if (it == attrs.end()) ln.fail(std::string("missing attribute '") + key + "'");
    return it->second;
}

}  // namespace

PantsGraph parse_dot(std::string_view text) {
    PantsGraph g;
    std::map<std::string, int> pants_index;
    std::map<std::string, bool> point_nodes;
    std::optional<Presentation> pres;
    bool opened = false, closed = false, have_header = false;

    auto word_of = [&](const DotLine& ln, const std::map<std::string, std::string>& attrs,
                       const char* key) -> std::optional<Word> {
        const auto it = attrs.find(key);
        if (it == attrs.end()) return std::nullopt;
        if (!pres) ln.fail("words need a surface with a presentation");
        try {
            return parse_word(it->second, *pres);
        } catch (const ParseError& e) {
            ln.fail(e.what());
        }
    };
    auto pants_ref = [&](const DotLine& ln, const std::string& name) {
        const auto it = pants_index.find(name);
        if (it == pants_index.end()) ln.fail("unknown pants '" + name + "'");
        return it->second;
    };

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        const std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        DotLine ln(raw, line_no);
        if (ln.at_end() || ln.accept("//")) continue;
        if (closed) ln.fail("text after the closing brace");
        if (!opened) {
            ln.expect("graph");
            if (!ln.accept("{")) {
                ln.identifier_or_string();
                ln.expect("{");
            }
            if (!ln.at_end()) ln.fail("trailing text");
            opened = true;
            continue;
        }
        if (ln.accept("}")) {
            if (!ln.at_end()) ln.fail("trailing text");
            closed = true;
            continue;
        }
        if (ln.accept("graph")) {
            const auto attrs = ln.attributes();
            ln.finish();
            g.genus = parse_int(ln, require(ln, attrs, "genus"));
            g.punctures = parse_int(ln, require(ln, attrs, "punctures"));
            have_header = true;
            if (!(g.genus < 0 || g.punctures < 0 || (g.genus == 0 && g.punctures <= 1))) {
                pres = surface_presentation(g.genus, g.punctures);
            }
            continue;
        }
        if (!have_header) ln.fail("expected the graph attribute line before nodes and edges");
        const std::string first = ln.identifier_or_string();
        if (ln.accept("--")) {
            const std::string second = ln.identifier_or_string();
            const auto attrs = ln.attributes();
            ln.finish();
            const auto leg_it = attrs.find("leg");
            if (leg_it != attrs.end() && leg_it->second == "true") {
                if (!point_nodes.count(second)) ln.fail("leg edge must end at a point node");
                Leg l;
                l.name = require(ln, attrs, "name");
                l.pants = pants_ref(ln, first);
                l.label = parse_label(ln, require(ln, attrs, "label"));
                l.word = word_of(ln, attrs, "word");
                g.legs.push_back(std::move(l));
            } else {
                Curve c;
                c.name = require(ln, attrs, "name");
                c.ends[0].pants = pants_ref(ln, first);
                c.ends[1].pants = pants_ref(ln, second);
                c.ends[0].label = parse_label(ln, require(ln, attrs, "label0"));
                c.ends[1].label = parse_label(ln, require(ln, attrs, "label1"));
                c.ends[0].word = word_of(ln, attrs, "word0");
                c.ends[1].word = word_of(ln, attrs, "word1");
                g.curves.push_back(std::move(c));
            }
            continue;
        }
        const auto attrs = ln.attributes();
        ln.finish();
        const auto shape = attrs.find("shape");
        if (shape != attrs.end() && shape->second == "point") {
            point_nodes[first] = true;
        } else {
            if (pants_index.count(first)) ln.fail("duplicate pants '" + first + "'");
            pants_index[first] = g.num_pants();
            g.pants_names.push_back(first);
        }
    }
    if (!opened) throw ParseError("line 1: empty input");
    if (!closed) throw ParseError("line " + std::to_string(line_no) + ": missing closing brace");
    return g;
}

}  // namespace pochhammer
