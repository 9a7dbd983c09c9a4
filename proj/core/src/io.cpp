#include "opmetric/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace opmetric {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("malformed JSON");
    }
    return doc;
}

Index int_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
    }
    return doc[key].get<Index>();
}

ComplexMatrix matrix_from(const json& doc, const std::string& what) {
    const Index rows = int_field(doc, "rows");
    const Index cols = int_field(doc, "cols");
    if (rows < 1 || cols < 1) {
        throw DimensionMismatch(what + ": rows and cols must be positive");
    }
    if (!doc.contains("data") || !doc["data"].is_array()) {
        throw ParseError(what + ": missing \"data\" array");
    }
    const json& data = doc["data"];
    if (static_cast<Index>(data.size()) != rows * cols) {
        std::ostringstream msg;
        msg << what << ": expected " << rows * cols << " entries, got " << data.size();
        throw DimensionMismatch(msg.str());
    }
    ComplexMatrix m(rows, cols);
    Index flat = 0;
    for (const json& entry : data) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ParseError(what + ": every entry must be a [re, im] number pair");
        }
        m(flat / cols, flat % cols) = Complex(entry[0].get<double>(), entry[1].get<double>());
        ++flat;
    }
    require_finite(m, what);
    return m;
}

void append_matrix_body(std::string& out, const ComplexMatrix& m,
                        const std::string& indent) {
    out += indent + "\"rows\": " + std::to_string(m.rows()) + ",\n";
    out += indent + "\"cols\": " + std::to_string(m.cols()) + ",\n";
    out += indent + "\"data\": [\n";
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            const Complex& z = m(r, c);
            out += indent + "  [" + format_double(z.real()) + ", " +
                   format_double(z.imag()) + "]";
            if (r * m.cols() + c + 1 < m.size()) {
                out += ",";
            }
            out += "\n";
        }
    }
    out += indent + "]";
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot open " + path.string() + " for writing");
    }
    out << text;
    if (!out) {
        throw InputError("failed to write " + path.string());
    }
}

} // namespace

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

ClosedOperator parse_operator(const std::string& text) {
    const json doc = parse_json(text);
    const ComplexMatrix m = matrix_from(doc, "operator");
    if (int_field(doc, "dimH") != m.cols() || int_field(doc, "dimK") != m.rows()) {
        throw DimensionMismatch("operator: dimH/dimK disagree with cols/rows");
    }
    return ClosedOperator(m);
}

std::string format_operator(const ClosedOperator& t) {
    std::string out = "{\n";
    out += "  \"dimH\": " + std::to_string(t.dim_h()) + ",\n";
    out += "  \"dimK\": " + std::to_string(t.dim_k()) + ",\n";
    append_matrix_body(out, t.mat(), "  ");
    out += "\n}\n";
    return out;
}

BallAutomorphism parse_generator(const std::string& text) {
    const json doc = parse_json(text);
    const Index dim_h = int_field(doc, "dimH");
    const Index dim_k = int_field(doc, "dimK");
    for (const char* key : {"A", "U", "V"}) {
        if (!doc.contains(key) || !doc[key].is_object()) {
            throw ParseError(std::string("generator: missing matrix block \"") + key + "\"");
        }
    }
    const ComplexMatrix a = matrix_from(doc["A"], "generator A block");
    const ComplexMatrix u = matrix_from(doc["U"], "generator U block");
    const ComplexMatrix v = matrix_from(doc["V"], "generator V block");
    if (a.rows() != dim_h || a.cols() != dim_k) {
        throw DimensionMismatch("generator: A block must be dimH x dimK");
    }
    if (u.rows() != dim_h || u.cols() != dim_h || v.rows() != dim_k || v.cols() != dim_k) {
        throw DimensionMismatch("generator: U must be dimH x dimH and V dimK x dimK");
    }
    return {BallPoint(a), u, v};
}

std::string format_generator(const BallAutomorphism& g) {
    std::string out = "{\n";
    out += "  \"dimH\": " + std::to_string(g.dim_h()) + ",\n";
    out += "  \"dimK\": " + std::to_string(g.dim_k()) + ",\n";
    const auto block = [&out](const char* name, const ComplexMatrix& m, bool last) {
        out += std::string("  \"") + name + "\": {\n";
        append_matrix_body(out, m, "    ");
        out += "\n  }";
        out += last ? "\n" : ",\n";
    };
    block("A", g.param().mat(), false);
    block("U", g.u(), false);
    block("V", g.v(), true);
    out += "}\n";
    return out;
}

ClosedOperator read_operator_file(const std::filesystem::path& path) {
    try {
        return parse_operator(read_text(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const DimensionMismatch& e) {
        throw DimensionMismatch(path.string() + ": " + e.what());
    } catch (const NonFiniteEntry& e) {
        throw NonFiniteEntry(path.string() + ": " + e.what());
    }
}

void write_operator_file(const std::filesystem::path& path, const ClosedOperator& t) {
    write_text(path, format_operator(t));
}

BallAutomorphism read_generator_file(const std::filesystem::path& path) {
    try {
        return parse_generator(read_text(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const DimensionMismatch& e) {
        throw DimensionMismatch(path.string() + ": " + e.what());
    } catch (const NonFiniteEntry& e) {
        throw NonFiniteEntry(path.string() + ": " + e.what());
    }
}

void write_generator_file(const std::filesystem::path& path, const BallAutomorphism& g) {
    write_text(path, format_generator(g));
}

} // namespace opmetric
