#include "symfano/document.hpp"

#include "symfano/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <climits>
#include <sstream>

namespace symfano {

namespace {

using nlohmann::json;

Integer read_integer(const json& v, const std::string& field)
{
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) {
            return Integer(std::to_string(v.get<std::uint64_t>()));
        }
        return Integer(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() > start && std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                            [](char c) { return c >= '0' && c <= '9'; })) {
            return Integer(s);
        }
    }
    fail(Errc::MalformedInput, "field " + field + ": expected an integer, got " + v.dump());
}

std::size_t read_index(const json& v, const std::string& field)
{
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        fail(Errc::MalformedInput, "field " + field + ": expected a non-negative index, got " + v.dump());
    }
    return static_cast<std::size_t>(v.get<std::uint64_t>());
}

const json& array_field(const json& v, const std::string& field)
{
    if (!v.is_array()) {
        fail(Errc::MalformedInput, "field " + field + ": expected an array");
    }
    return v;
}

std::string line_of(const std::string& text, std::size_t byte)
{
    const auto end = text.begin() + static_cast<long>(std::min(byte, text.size()));
    const auto line = 1 + std::count(text.begin(), end, '\n');
    return "line " + std::to_string(line);
}

void write_integer(std::ostream& os, const Integer& x)
{
    if (x.fits_slong_p() && sizeof(long) >= 8) {
        os << x.get_si();
    } else {
        os << '"' << x.get_str() << '"';
    }
}

} // namespace

FanDocument parse_document(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::MalformedInput, line_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    if (!doc.is_object()) {
        fail(Errc::MalformedInput, "document must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "dim" && key != "generators" && key != "max_cones" && key != "name") {
            fail(Errc::MalformedInput, "unknown field " + key);
        }
    }
    for (const char* key : {"dim", "generators", "max_cones"}) {
        if (!doc.contains(key)) {
            fail(Errc::MalformedInput, std::string("missing field ") + key);
        }
    }
    const std::size_t dim = read_index(doc["dim"], "dim");

    std::vector<LatticeVector> gens;
    const auto& gj = array_field(doc["generators"], "generators");
    for (std::size_t i = 0; i < gj.size(); ++i) {
        const std::string field = "generators[" + std::to_string(i) + "]";
        const auto& row = array_field(gj[i], field);
        std::vector<Integer> coords;
        for (std::size_t j = 0; j < row.size(); ++j) {
            coords.push_back(read_integer(row[j], field + "[" + std::to_string(j) + "]"));
        }
        gens.emplace_back(std::move(coords));
    }

    std::vector<IndexSet> cones;
    const auto& cj = array_field(doc["max_cones"], "max_cones");
    for (std::size_t i = 0; i < cj.size(); ++i) {
        const std::string field = "max_cones[" + std::to_string(i) + "]";
        const auto& row = array_field(cj[i], field);
        IndexSet c;
        for (std::size_t j = 0; j < row.size(); ++j) {
            c.push_back(read_index(row[j], field + "[" + std::to_string(j) + "]"));
        }
        cones.push_back(std::move(c));
    }

    std::optional<std::string> name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            fail(Errc::MalformedInput, "field name: expected a string");
        }
        name = doc["name"].get<std::string>();
    }
    return FanDocument{Fan(dim, std::move(gens), std::move(cones)), std::move(name)};
}

std::string print_document(const FanDocument& doc)
{
    std::ostringstream os;
    os << "{\n";
    if (doc.name) {
        os << "  \"name\": " << json(*doc.name).dump() << ",\n";
    }
    os << "  \"dim\": " << doc.fan.dim() << ",\n";
    os << "  \"generators\": [";
    const auto& gens = doc.fan.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        os << (i ? ",\n    [" : "\n    [");
        for (std::size_t j = 0; j < gens[i].size(); ++j) {
            if (j) {
                os << ", ";
            }
            write_integer(os, gens[i][j]);
        }
        os << ']';
    }
    os << "\n  ],\n  \"max_cones\": [";
    const auto& cones = doc.fan.max_cones();
    for (std::size_t i = 0; i < cones.size(); ++i) {
        os << (i ? ",\n    [" : "\n    [");
        for (std::size_t j = 0; j < cones[i].size(); ++j) {
            os << (j ? ", " : "") << cones[i][j];
        }
        os << ']';
    }
    os << "\n  ]\n}\n";
    return os.str();
}

} // namespace symfano
