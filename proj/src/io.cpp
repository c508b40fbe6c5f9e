#include "laf/io.hpp"

#include <fstream>
#include <sstream>

namespace laf {

const char* const kVersion = "0.1.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

json load_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
}

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw input_error(std::string("missing field '") + name + "'");
    return *it;
}

std::string str_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_string()) throw input_error(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

} // namespace

RingPtr ring_from_json(const json& j) {
    std::string kind = str_field(j, "kind");
    if (kind != "laurent" && kind != "polynomial")
        throw input_error("ring kind must be 'laurent' or 'polynomial'");
    const json& vars = field(j, "vars");
    if (!vars.is_array() || vars.empty())
        throw input_error("ring 'vars' must be a nonempty array");
    std::vector<std::string> names;
    for (const auto& v : vars) {
        if (!v.is_string()) throw input_error("ring variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    return make_ring(kind == "laurent" ? RingKind::laurent : RingKind::polynomial,
                     std::move(names));
}

json ring_to_json(const RingDescriptor& ring) {
    json j;
    j["kind"] = ring.kind == RingKind::laurent ? "laurent" : "polynomial";
    j["vars"] = ring.vars;
    return j;
}

namespace {

std::vector<Poly> poly_vector_from_json(const json& j, const RingPtr& ring,
                                        std::size_t expect, const char* what) {
    if (!j.is_array() || j.size() != expect)
        throw input_error(std::string(what) + " must be an array of " +
                          std::to_string(expect) + " polynomial strings");
    std::vector<Poly> out;
    out.reserve(expect);
    for (const auto& s : j) {
        if (!s.is_string())
            throw input_error(std::string(what) + " entries must be polynomial strings");
        out.push_back(parse_poly(s.get<std::string>(), ring));
    }
    return out;
}

} // namespace

AlgebraPtr algebra_from_json(const json& j) {
    RingPtr base = ring_from_json(field(j, "base"));
    const json& rank_f = field(j, "rank");
    if (!rank_f.is_number_unsigned() || rank_f.get<std::size_t>() == 0)
        throw input_error("field 'rank' must be a positive integer");
    std::size_t rank = rank_f.get<std::size_t>();

    FiniteAlgebra alg;
    alg.base = base;
    alg.rank = rank;
    const json& basis = field(j, "basis");
    if (!basis.is_array() || basis.size() != rank)
        throw input_error("field 'basis' must list rank basis names");
    for (const auto& b : basis) alg.basis_names.push_back(b.get<std::string>());
    alg.unit = poly_vector_from_json(field(j, "unit"), base, rank, "'unit'");

    const json& mul = field(j, "mul");
    if (!mul.is_array() || mul.size() != rank)
        throw input_error("field 'mul' must be a rank x rank table");
    for (std::size_t i = 0; i < rank; ++i) {
        if (!mul[i].is_array() || mul[i].size() != rank)
            throw input_error("field 'mul' must be a rank x rank table");
        std::vector<std::vector<Poly>> row;
        for (std::size_t k = 0; k < rank; ++k)
            row.push_back(poly_vector_from_json(mul[i][k], base, rank, "'mul' entry"));
        alg.mul_table.push_back(std::move(row));
    }
    const json& c = field(j, "commutative");
    if (!c.is_boolean()) throw input_error("field 'commutative' must be a boolean");
    alg.commutative = c.get<bool>();
    return make_algebra(std::move(alg));
}

json algebra_to_json(const FiniteAlgebra& alg) {
    json j;
    j["base"] = ring_to_json(*alg.base);
    j["rank"] = alg.rank;
    j["basis"] = alg.basis_names;
    json unit = json::array();
    for (const auto& c : alg.unit) unit.push_back(format_poly(c));
    j["unit"] = unit;
    json mul = json::array();
    for (const auto& row : alg.mul_table) {
        json jrow = json::array();
        for (const auto& entry : row) {
            json coords = json::array();
            for (const auto& c : entry) coords.push_back(format_poly(c));
            jrow.push_back(coords);
        }
        mul.push_back(jrow);
    }
    j["mul"] = mul;
    j["commutative"] = alg.commutative;
    return j;
}

Character character_from_json(const json& j) {
    Character chi;
    std::string mode = str_field(j, "mode");
    if (mode == "exact")
        chi.mode = Mode::exact;
    else if (mode == "float")
        chi.mode = Mode::floating;
    else
        throw input_error("character mode must be 'exact' or 'float'");
    if (j.contains("tolerance")) {
        if (!j["tolerance"].is_number()) throw input_error("tolerance must be a number");
        chi.tolerance = j["tolerance"].get<double>();
        if (chi.tolerance < 0) throw input_error("negative tolerance");
    }
    const json& values = field(j, "values");
    if (!values.is_object()) throw input_error("character 'values' must be an object");
    for (auto it = values.begin(); it != values.end(); ++it) {
        if (!it.value().is_string())
            throw input_error("character values must be strings");
        std::string s = it.value().get<std::string>();
        chi.values.emplace(it.key(), chi.mode == Mode::exact ? Scalar::parse_exact(s)
                                                             : Scalar::parse_float(s));
    }
    return chi;
}

json character_to_json(const Character& chi) {
    json j;
    j["mode"] = chi.mode == Mode::exact ? "exact" : "float";
    j["tolerance"] = chi.tolerance;
    json vals;
    for (const auto& [k, v] : chi.values) vals[k] = v.str();
    j["values"] = vals;
    return j;
}

std::vector<Character> characters_from_json(const json& j) {
    std::vector<Character> out;
    if (j.is_array()) {
        for (const auto& e : j) out.push_back(character_from_json(e));
    } else {
        out.push_back(character_from_json(j));
    }
    return out;
}

Tower tower_from_json(const json& j) {
    RingPtr A = ring_from_json(field(j, "A"));
    const json& bj = field(j, "B");
    if (bj.contains("base")) {
        RingPtr base_b = ring_from_json(bj["base"]);
        if (!same_ring(base_b, A)) throw input_error("tower B base ring differs from A");
    }
    json bj2 = bj;
    bj2["base"] = ring_to_json(*A);
    AlgebraPtr B = algebra_from_json(bj2);
    if (!B->commutative) throw input_error("tower B must be commutative");

    const json& cj = field(j, "C_over_B");
    std::size_t m = field(cj, "rank").get<std::size_t>();
    if (m == 0) throw input_error("C_over_B rank must be positive");

    auto bcoords = [&](const json& e) {
        return poly_vector_from_json(e, A, B->rank, "B-coordinate vector");
    };
    const json& cunit = field(cj, "unit");
    if (!cunit.is_array() || cunit.size() != m)
        throw input_error("C_over_B unit must list rank B-coordinate vectors");
    std::vector<BElem> c_unit;
    for (const auto& e : cunit) c_unit.push_back(bcoords(e));

    const json& cmul = field(cj, "mul");
    if (!cmul.is_array() || cmul.size() != m)
        throw input_error("C_over_B mul must be a rank x rank table");
    std::vector<std::vector<std::vector<BElem>>> c_mul;
    for (std::size_t i = 0; i < m; ++i) {
        if (!cmul[i].is_array() || cmul[i].size() != m)
            throw input_error("C_over_B mul must be a rank x rank table");
        std::vector<std::vector<BElem>> row;
        for (std::size_t k = 0; k < m; ++k) {
            const json& entry = cmul[i][k];
            if (!entry.is_array() || entry.size() != m)
                throw input_error("C_over_B mul entries must list rank B-coordinates");
            std::vector<BElem> coords;
            for (const auto& e : entry) coords.push_back(bcoords(e));
            row.push_back(std::move(coords));
        }
        c_mul.push_back(std::move(row));
    }
    return make_tower(std::move(B), m, std::move(c_unit), std::move(c_mul));
}

json scalar_to_json(const Scalar& s) { return s.str(); }

json fiber_report_to_json(const FiberReport& rep) {
    json j;
    j["rank"] = rep.rank;
    j["radical_dim"] = rep.radical_dim;
    json rb = json::array();
    for (const auto& v : rep.radical_basis) {
        json row = json::array();
        for (const auto& x : v) row.push_back(scalar_to_json(x));
        rb.push_back(row);
    }
    j["radical_basis"] = rb;
    j["blocks"] = rep.blocks;
    j["num_simples"] = rep.num_simples;
    json tv = json::array();
    for (const auto& v : rep.trace_vectors) {
        json row = json::array();
        for (const auto& x : v) row.push_back(Scalar::floating(x).str());
        tv.push_back(row);
    }
    j["trace_vectors"] = tv;
    j["stratum_index"] = rep.stratum_index;
    j["in_X0"] = rep.in_X0;
    j["discriminant_value"] = scalar_to_json(rep.discriminant_value);
    j["seed"] = rep.seed;
    j["mode"] = rep.mode == Mode::exact ? "exact" : "float";
    return j;
}

} // namespace laf
