#include "liftlocal/problem_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace liftlocal {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(s);
    while (std::getline(in, piece, sep)) out.push_back(piece);
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

bool keyword_line(const std::string& line, const std::string& keyword, std::string& rest) {
    if (line.rfind(keyword, 0) != 0) return false;
    if (line.size() > keyword.size() && !std::isspace(static_cast<unsigned char>(line[keyword.size()]))) {
        return false;
    }
    rest = trim(line.substr(keyword.size()));
    return true;
}

Polynomial parse_fragment(const std::string& fragment, const ContextPtr& ctx,
                          const std::string& what) {
    try {
        return parse_polynomial(fragment, ctx);
    } catch (const ParseError& err) {
        throw ParseError("in " + what + " '" + fragment + "': " + err.what());
    }
}

FieldSpec parse_field_declaration(const std::string& rest, std::size_t lineno) {
    const std::vector<std::string> w = words(rest);
    if (w.size() == 1 && w[0] == "Q") return FieldSpec::rationals();
    if (w.size() == 2 && w[0] == "F") {
        std::uint64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(w[1], &used);
            if (used != w[1].size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ParseError("field characteristic must be a positive integer", lineno);
        }
        return FieldSpec::prime(p);
    }
    throw ParseError("field declaration must be 'field Q' or 'field F <p>'", lineno);
}

}  // namespace

LiftProblem parse_problem(const std::string& text) {
    std::optional<FieldSpec> field;
    std::optional<std::vector<std::string>> ring;
    std::optional<std::string> ideal_src;
    std::optional<std::string> map_src;
    std::optional<Mode> mode;
    enum class Open { None, Ideal, Map };
    Open open = Open::None;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        std::string rest;
        if (keyword_line(line, "field", rest)) {
            if (field) throw ParseError("duplicate field declaration", lineno);
            field = parse_field_declaration(rest, lineno);
            open = Open::None;
        } else if (keyword_line(line, "ring", rest)) {
            if (ring) throw ParseError("duplicate ring declaration", lineno);
            const std::vector<std::string> names = words(rest);
            if (names.empty()) throw ParseError("ring declaration lists no variables", lineno);
            ring = names;
            open = Open::None;
        } else if (line.rfind("ideal:", 0) == 0) {
            if (ideal_src) throw ParseError("duplicate ideal declaration", lineno);
            ideal_src = trim(line.substr(6));
            open = Open::Ideal;
        } else if (line.rfind("map:", 0) == 0) {
            if (map_src) throw ParseError("duplicate map declaration", lineno);
            map_src = trim(line.substr(4));
            open = Open::Map;
        } else if (line.rfind("mode:", 0) == 0) {
            if (mode) throw ParseError("duplicate mode declaration", lineno);
            const std::string value = trim(line.substr(5));
            if (value == "local") {
                mode = Mode::Local;
            } else if (value == "graded") {
                mode = Mode::Graded;
            } else {
                throw ParseError("mode must be 'local' or 'graded'", lineno);
            }
            open = Open::None;
        } else if (open == Open::Ideal) {
            *ideal_src += " " + line;
        } else if (open == Open::Map) {
            *map_src += " " + line;
        } else {
            throw ParseError("unrecognized line '" + line + "'", lineno);
        }
    }

    if (!field) throw ParseError("missing field declaration");
    if (!ring) throw ParseError("missing ring declaration");
    if (!ideal_src) throw ParseError("missing ideal declaration");
    const ContextPtr ctx = make_context(*ring, *field);

    std::vector<Polynomial> gens;
    for (const std::string& piece : split(*ideal_src, ';')) {
        const std::string fragment = trim(piece);
        if (fragment.empty()) continue;
        gens.push_back(parse_fragment(fragment, ctx, "ideal generator"));
    }

    std::optional<VariableMap> map;
    if (map_src) {
        std::vector<std::optional<Polynomial>> images(ctx->size());
        for (const std::string& piece : split(*map_src, ';')) {
            const std::string fragment = trim(piece);
            if (fragment.empty()) continue;
            const std::size_t arrow = fragment.find("->");
            if (arrow == std::string::npos) {
                throw ParseError("map entry '" + fragment + "' lacks '->'");
            }
            const std::string name = trim(fragment.substr(0, arrow));
            const int idx = ctx->index_of(name);
            if (idx < 0) throw ParseError("map entry names unknown variable '" + name + "'");
            if (images[static_cast<std::size_t>(idx)]) {
                throw ParseError("map assigns variable '" + name + "' twice");
            }
            images[static_cast<std::size_t>(idx)] =
                parse_fragment(trim(fragment.substr(arrow + 2)), ctx, "map image");
        }
        std::vector<Polynomial> filled;
        for (std::size_t i = 0; i < ctx->size(); ++i) {
            if (!images[i]) {
                throw ParseError("map assigns no image to variable '" + ctx->name(i) + "'");
            }
            filled.push_back(std::move(*images[i]));
        }
        map = VariableMap(ctx, std::move(filled));
    }

    return LiftProblem{ctx, IdealData(ctx, std::move(gens)), mode.value_or(Mode::Local),
                       std::move(map)};
}

LiftProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

namespace {

void render_matrix(std::ostringstream& out, const ScalarMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) out << ", ";
            out << m.at(i, j).to_string();
        }
        out << "]\n";
    }
}

void render_check(std::ostringstream& out, const std::string& name, const CheckResult& c) {
    out << "  " << name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.witness << ")\n";
}

const char* const kSectionHeaders[] = {"LIFT",  "COORD_CHANGE", "COORD_CHANGE_INVERSE",
                                       "TRACE", "CHECKS",       "META"};

bool is_section_header(const std::string& line) {
    for (const char* header : kSectionHeaders) {
        if (line == header) return true;
    }
    return false;
}

}  // namespace

std::string render_checks(const VerificationReport& report) {
    std::ostringstream out;
    render_check(out, "commutation", report.commutation);
    render_check(out, "ideal-stability", report.ideal_stability);
    render_check(out, "m-primary", report.cofiniteness);
    return out.str();
}

std::string render_certificate(const LiftCertificate& cert,
                               const VerificationReport& report, Mode mode) {
    const ContextPtr& ctx = cert.lift.context();
    std::ostringstream out;
    out << "LIFT\n";
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        out << "  " << ctx->name(i) << " -> " << cert.lift.image(i).to_string() << "\n";
    }
    out << "COORD_CHANGE\n";
    render_matrix(out, cert.coordinate_change);
    out << "COORD_CHANGE_INVERSE\n";
    render_matrix(out, cert.coordinate_change_inverse);
    out << "TRACE\n";
    for (const TraceRow& row : cert.trace) {
        out << "  " << row.step << ", " << row.dimension << ", " << row.adjuster.to_string()
            << "\n";
    }
    out << "CHECKS\n";
    out << render_checks(report);
    out << "META\n";
    out << "  seed = " << cert.seed << "\n";
    out << "  attempts = " << cert.attempts << "\n";
    out << "  mode = " << mode_name(mode) << "\n";
    out << "  version = " << kToolVersion << "\n";
    return out.str();
}

VariableMap parse_certificate_lift(const std::string& text, const ContextPtr& ctx) {
    std::istringstream in(text);
    std::string raw;
    bool in_lift = false;
    std::vector<std::optional<Polynomial>> images(ctx->size());
    while (std::getline(in, raw)) {
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (is_section_header(line)) {
            in_lift = line == "LIFT";
            continue;
        }
        if (!in_lift) continue;
        const std::size_t arrow = line.find("->");
        if (arrow == std::string::npos) {
            throw ParseError("certificate LIFT line '" + line + "' lacks '->'");
        }
        const std::string name = trim(line.substr(0, arrow));
        const int idx = ctx->index_of(name);
        if (idx < 0) {
            throw ParseError("certificate LIFT names unknown variable '" + name + "'");
        }
        if (images[static_cast<std::size_t>(idx)]) {
            throw ParseError("certificate LIFT assigns variable '" + name + "' twice");
        }
        images[static_cast<std::size_t>(idx)] =
            parse_fragment(trim(line.substr(arrow + 2)), ctx, "certificate image");
    }
    std::vector<Polynomial> filled;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        if (!images[i]) {
            throw ParseError("certificate LIFT misses variable '" + ctx->name(i) + "'");
        }
        filled.push_back(std::move(*images[i]));
    }
    return VariableMap(ctx, std::move(filled));
}

}  // namespace liftlocal
