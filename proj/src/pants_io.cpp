#include "pochhammer/pants_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "pochhammer/errors.hpp"

namespace pochhammer {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
    throw ValidationError(path + ": " + msg);
}

const json& field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) schema_error(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
    return *it;
}

const json* optional_field(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return nullptr;
    return &*it;
}

std::int64_t integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) schema_error(path, "expected an integer");
    return v.get<std::int64_t>();
}

int small_integer(const json& v, const std::string& path) {
    const std::int64_t x = integer(v, path);
    if (x < -1000000 || x > 1000000) schema_error(path, "integer out of range");
    return static_cast<int>(x);
}

const json& array(const json& v, const std::string& path) {
    if (!v.is_array()) schema_error(path, "expected an array");
    return v;
}

std::string string(const json& v, const std::string& path) {
    if (!v.is_string()) schema_error(path, "expected a string");
    return v.get<std::string>();
}

Label label(const json& v, const std::string& path) {
    Label out;
    const json& a = array(v, path);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(integer(a[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void check_format(const json& j) {
    const json& f = field(j, "$", "format");
    if (string(f, "$.format") != kFormatTag) {
        schema_error("$.format", "unsupported format '" + f.get<std::string>() + "'");
    }
}

std::optional<Presentation> presentation_of(int genus, int punctures) {
    if (genus < 0 || punctures < 0 || (genus == 0 && punctures <= 1)) return std::nullopt;
    return surface_presentation(genus, punctures);
}

std::optional<Word> word(const json* v, const std::optional<Presentation>& pres, const std::string& path) {
    if (v == nullptr) return std::nullopt;
    const std::string text = string(*v, path);
    if (!pres) schema_error(path, "words need a surface with a presentation");
    try {
        return parse_word(text, *pres);
    } catch (const ParseError& e) {
        schema_error(path, e.what());
    }
}

}  // namespace

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        const auto colon = msg.rfind(": ");
        if (colon != std::string::npos) msg = msg.substr(colon + 2);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SurfaceSpec surface_spec_from_json(const json& j) {
    check_format(j);
    SurfaceSpec s;
    if (const json* g = optional_field(j, "genus")) s.genus = small_integer(*g, "$.genus");
    if (const json* h = optional_field(j, "punctures")) s.punctures = small_integer(*h, "$.punctures");
    if (const json* a = optional_field(j, "alpha")) {
        const json& rows = array(*a, "$.alpha");
        std::vector<IntVector> data;
        std::size_t cols = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string path = "$.alpha[" + std::to_string(r) + "]";
            const Label row = label(rows[r], path);
            if (r == 0) cols = row.size();
            if (row.size() != cols) schema_error(path, "rows have different lengths");
            data.push_back(row);
        }
        s.alpha = IntMatrix::from_rows(data, cols);
    }
    return s;
}

SurfaceSpec parse_surface_spec(std::string_view text) { return surface_spec_from_json(parse_json(text)); }

PantsGraph pants_from_json(const json& j) {
    check_format(j);
    PantsGraph g;
    const json& surface = field(j, "$", "surface");
    g.genus = small_integer(field(surface, "$.surface", "genus"), "$.surface.genus");
    g.punctures = small_integer(field(surface, "$.surface", "punctures"), "$.surface.punctures");
    const auto pres = presentation_of(g.genus, g.punctures);

    std::map<std::string, int> by_name;
    const json& pants = array(field(j, "$", "pants"), "$.pants");
    for (std::size_t p = 0; p < pants.size(); ++p) {
        const std::string path = "$.pants[" + std::to_string(p) + "]";
        std::string name = string(pants[p], path);
        if (by_name.count(name)) schema_error(path, "duplicate pants name '" + name + "'");
        by_name[name] = static_cast<int>(p);
        g.pants_names.push_back(std::move(name));
    }
    auto pants_ref = [&](const json& v, const std::string& path) {
        if (v.is_string()) {
            const auto it = by_name.find(v.get<std::string>());
            if (it == by_name.end()) schema_error(path, "unknown pants '" + v.get<std::string>() + "'");
            return it->second;
        }
        const int idx = small_integer(v, path);
        if (idx < 0 || idx >= g.num_pants()) schema_error(path, "pants index out of range");
        return idx;
    };

    if (const json* curves = optional_field(j, "curves")) {
        array(*curves, "$.curves");
        for (std::size_t c = 0; c < curves->size(); ++c) {
            const std::string path = "$.curves[" + std::to_string(c) + "]";
            const json& cj = (*curves)[c];
            Curve cv;
            cv.name = string(field(cj, path, "name"), path + ".name");
            const json& ends = array(field(cj, path, "ends"), path + ".ends");
            if (ends.size() != 2) schema_error(path + ".ends", "expected two endpoints");
            for (int s = 0; s < 2; ++s) {
                cv.ends[static_cast<std::size_t>(s)].pants =
                    pants_ref(ends[static_cast<std::size_t>(s)], path + ".ends[" + std::to_string(s) + "]");
            }
            if (const json* ls = optional_field(cj, "labels")) {
                if (!ls->is_array() || ls->size() != 2) schema_error(path + ".labels", "expected two labels");
                cv.ends[0].label = label((*ls)[0], path + ".labels[0]");
                cv.ends[1].label = label((*ls)[1], path + ".labels[1]");
            } else {
                cv.ends[0].label = label(field(cj, path, "label"), path + ".label");
                cv.ends[1].label = -cv.ends[0].label;
            }
            if (const json* ws = optional_field(cj, "words")) {
                if (!ws->is_array() || ws->size() != 2) schema_error(path + ".words", "expected two entries");
                for (int s = 0; s < 2; ++s) {
                    const json& w = (*ws)[static_cast<std::size_t>(s)];
                    cv.ends[static_cast<std::size_t>(s)].word =
                        word(w.is_null() ? nullptr : &w, pres, path + ".words[" + std::to_string(s) + "]");
                }
            }
            g.curves.push_back(std::move(cv));
        }
    }
    if (const json* legs = optional_field(j, "legs")) {
        array(*legs, "$.legs");
        for (std::size_t l = 0; l < legs->size(); ++l) {
            const std::string path = "$.legs[" + std::to_string(l) + "]";
            const json& lj = (*legs)[l];
            Leg leg;
            leg.name = string(field(lj, path, "name"), path + ".name");
            leg.pants = pants_ref(field(lj, path, "pants"), path + ".pants");
            leg.label = label(field(lj, path, "label"), path + ".label");
            leg.word = word(optional_field(lj, "word"), pres, path + ".word");
            g.legs.push_back(std::move(leg));
        }
    }
    return g;
}

json pants_to_json(const PantsGraph& g) {
    const auto pres = presentation_of(g.genus, g.punctures);
    auto word_json = [&](const std::optional<Word>& w) -> json {
        if (!w || !pres) return nullptr;
        return to_string(*w, *pres);
    };
    json curves = json::array();
    for (const auto& c : g.curves) {
        json cj;
        cj["name"] = c.name;
        cj["ends"] = {g.pants_names.at(static_cast<std::size_t>(c.ends[0].pants)),
                      g.pants_names.at(static_cast<std::size_t>(c.ends[1].pants))};
        if (c.ends[1].label == -c.ends[0].label) {
            cj["label"] = c.ends[0].label;
        } else {
            cj["labels"] = {c.ends[0].label, c.ends[1].label};
        }
        if (c.ends[0].word || c.ends[1].word) cj["words"] = {word_json(c.ends[0].word), word_json(c.ends[1].word)};
        curves.push_back(std::move(cj));
    }
    json legs = json::array();
    for (const auto& l : g.legs) {
        json lj;
        lj["name"] = l.name;
        lj["pants"] = g.pants_names.at(static_cast<std::size_t>(l.pants));
        lj["label"] = l.label;
        if (l.word) lj["word"] = word_json(l.word);
        legs.push_back(std::move(lj));
    }
    json j;
    j["format"] = kFormatTag;
    j["surface"] = {{"genus", g.genus}, {"punctures", g.punctures}};
    j["pants"] = g.pants_names;
    j["curves"] = std::move(curves);
    j["legs"] = std::move(legs);
    return j;
}

PantsGraph parse_pants(std::string_view text) { return pants_from_json(parse_json(text)); }

std::string write_pants(const PantsGraph& g) { return pants_to_json(g).dump(2) + "\n"; }

}  // namespace pochhammer
