#include "fano/cubicio.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fano {

using nlohmann::json;

Cubic parse_cubic_text(const std::string& text, const std::string& source_name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source_name + ": " + e.what());
    }
    auto fail = [&](const std::string& what) -> void {
        throw ParseError(source_name + ": " + what);
    };

    if (!doc.is_object()) fail("top level must be an object");
    if (!doc.contains("variables") || !doc["variables"].is_number_integer() ||
        doc["variables"].get<int>() != 5)
        fail("field \"variables\" must be the integer 5");
    if (!doc.contains("field") || doc["field"] != "Q(w)")
        fail("field \"field\" must be \"Q(w)\"");
    if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
        fail("field \"terms\" must be a non-empty list");

    Poly form;
    std::size_t index = 0;
    for (const auto& term : doc["terms"]) {
        ++index;
        std::string where = "term " + std::to_string(index);
        if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
            fail(where + ": expected {exponents, coeff}");
        const auto& exps = term["exponents"];
        if (!exps.is_array() || exps.size() != 5)
            fail(where + ": exponents must be a list of 5 integers");
        Monomial m;
        for (int i = 0; i < 5; ++i) {
            if (!exps[static_cast<std::size_t>(i)].is_number_integer())
                fail(where + ": exponents must be integers");
            int e = exps[static_cast<std::size_t>(i)].get<int>();
            if (e < 0) fail(where + ": negative exponent");
            m.e[i] = e;
        }
        if (m.degree() != 3)
            fail(where + ": non-homogeneous (degree " + std::to_string(m.degree()) + ")");
        if (!term["coeff"].is_string())
            fail(where + ": coeff must be a string");
        FieldElement c;
        try {
            c = parse_coeff(term["coeff"].get<std::string>());
        } catch (const ParseError& e) {
            fail(where + ": " + e.what());
        }
        if (c.is_zero()) fail(where + ": zero coefficient");
        if (form.terms().count(m))
            fail(where + ": duplicate monomial");
        form.add_term(m, c);
    }
    try {
        return Cubic(std::move(form));
    } catch (const DomainError& e) {
        throw ParseError(source_name + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

Cubic parse_cubic_file(const std::string& path) {
    return parse_cubic_text(read_file(path), path);
}

std::string serialize_cubic(const Cubic& f) {
    std::ostringstream os;
    os << "{\n  \"variables\": 5,\n  \"field\": \"Q(w)\",\n  \"terms\": [\n";
    bool first = true;
    for (const auto& [m, c] : f.form().terms()) {
        if (!first) os << ",\n";
        first = false;
        os << "    {\"exponents\": [" << m.e[0] << ", " << m.e[1] << ", " << m.e[2]
           << ", " << m.e[3] << ", " << m.e[4] << "], \"coeff\": \"" << to_string(c)
           << "\"}";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string cubic_digest(const Cubic& f) {
    std::uint64_t h = fnv1a64(serialize_cubic(f));
    std::ostringstream os;
    os << "fnv1a64:" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::vector<ProjectivePoint> parse_seeds_text(const std::string& text) {
    std::vector<ProjectivePoint> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        // Split on commas and whitespace.
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
                if (!cur.empty()) fields.push_back(std::move(cur)), cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) fields.push_back(std::move(cur));
        if (fields.empty()) continue;
        if (fields.size() != 5)
            throw ParseError("seeds line " + std::to_string(lineno) +
                             ": expected 5 coordinates, got " + std::to_string(fields.size()));
        Vec5 v;
        for (int i = 0; i < 5; ++i) {
            try {
                v(i) = parse_coeff(fields[static_cast<std::size_t>(i)]);
            } catch (const ParseError& e) {
                throw ParseError("seeds line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        try {
            out.emplace_back(v);
        } catch (const DomainError&) {
            throw ParseError("seeds line " + std::to_string(lineno) + ": zero point");
        }
    }
    return out;
}

std::vector<ProjectivePoint> parse_seeds_file(const std::string& path) {
    return parse_seeds_text(read_file(path));
}

}  // namespace fano
