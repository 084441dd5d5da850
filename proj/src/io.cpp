#include "mahlersep/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace msep {

namespace {

using json = nlohmann::json;
using Coefficient = std::variant<mpz_class, Complex>;

double parse_real(const std::string& text)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used])))
        ++used;
    if (used != text.size())
        throw std::invalid_argument("not a number: '" + text + "'");
    return value;
}

double real_from(const json& j)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string())
        return parse_real(j.get<std::string>());
    throw std::invalid_argument("expected a number, got " + j.dump());
}

Complex complex_from(const json& j)
{
    if (j.is_array()) {
        if (j.size() != 2)
            throw std::invalid_argument("complex values are [re, im] pairs, got " + j.dump());
        return {real_from(j[0]), real_from(j[1])};
    }
    return {real_from(j), 0.0};
}

Coefficient coefficient_from(const json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? mpz_class(std::to_string(j.get<std::uint64_t>()))
                                      : mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        try {
            return parse_integer(text);
        } catch (const std::invalid_argument&) {
            return Complex(parse_real(text), 0.0);
        }
    }
    return complex_from(j);
}

const json& unwrap(const json& j, const char* key)
{
    if (j.is_object()) {
        if (!j.contains(key))
            throw std::invalid_argument(std::string("expected a \"") + key + "\" member");
        return j.at(key);
    }
    return j;
}

json number_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json optional_number(const std::optional<double>& v)
{
    return v ? number_or_null(*v) : json(nullptr);
}

void write_value(std::ostream& out, const json& j, int indent, int depth)
{
    const bool pretty = indent >= 0;
    auto newline = [&](int level) {
        if (pretty)
            out << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (j.type()) {
    case json::value_t::number_float: {
        const double v = j.get<double>();
        if (std::isfinite(v))
            out << format_number(v);
        else
            out << "null";
        break;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            break;
        }
        // Short numeric pairs such as [re, im] stay on one line.
        const bool flat = j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
        out << '[';
        bool first = true;
        for (const auto& e : j) {
            if (!first)
                out << (flat && pretty ? ", " : ",");
            first = false;
            if (!flat)
                newline(depth + 1);
            write_value(out, e, indent, depth + 1);
        }
        if (!flat)
            newline(depth);
        out << ']';
        break;
    }
    case json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            break;
        }
        out << '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out << ',';
            first = false;
            newline(depth + 1);
            out << json(it.key()).dump() << (pretty ? ": " : ":");
            write_value(out, it.value(), indent, depth + 1);
        }
        newline(depth);
        out << '}';
        break;
    }
    default:
        out << j.dump();
    }
}

}  // namespace

Polynomial polynomial_from_json(const json& j)
{
    const json& arr = unwrap(j, "coeffs");
    if (!arr.is_array())
        throw std::invalid_argument("coefficients must be a JSON array");
    std::vector<Coefficient> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& e : arr)
        coeffs.push_back(coefficient_from(e));

    const bool all_integer = std::all_of(coeffs.begin(), coeffs.end(),
                                         [](const Coefficient& c) { return std::holds_alternative<mpz_class>(c); });
    if (all_integer) {
        std::vector<mpz_class> ints;
        ints.reserve(coeffs.size());
        for (auto& c : coeffs)
            ints.push_back(std::get<mpz_class>(c));
        return Polynomial::from_integer_coefficients(ints);
    }
    std::vector<Complex> values;
    values.reserve(coeffs.size());
    for (auto& c : coeffs) {
        if (const auto* z = std::get_if<mpz_class>(&c))
            values.emplace_back(to_double(*z), 0.0);
        else
            values.push_back(std::get<Complex>(c));
    }
    return Polynomial::from_coefficients(values);
}

RootSet roots_from_json(const json& j)
{
    const json& arr = unwrap(j, "roots");
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("roots must be a non-empty JSON array");
    std::vector<Complex> roots;
    roots.reserve(arr.size());
    for (const auto& e : arr)
        roots.push_back(complex_from(e));
    return RootSet::exact(std::move(roots));
}

AnalysisInput input_from_json(const json& j)
{
    AnalysisInput in;
    if (j.is_object() && j.contains("roots"))
        in.roots = roots_from_json(j);
    else
        in.polynomial = polynomial_from_json(j);
    return in;
}

json to_json(const BoundReport& report)
{
    const MeasureReport& m = report.measured;
    json out;
    out["n"] = report.n;
    out["sep"] = optional_number(m.sep);
    out["abs_sep"] = optional_number(m.abs_sep);
    out["mahler"] = number_or_null(m.mahler);
    out["log_mahler"] = number_or_null(m.log_mahler);
    out["disc"] = json::array({number_or_null(m.disc.real()), number_or_null(m.disc.imag())});
    if (m.exact_disc)
        out["disc_exact"] = m.exact_disc->get_str();
    out["height"] = optional_number(m.height);
    if (m.signature)
        out["signature"] = json::array({m.signature->t, m.signature->s});
    else
        out["signature"] = nullptr;
    json entries = json::array();
    for (const auto& e : report.entries) {
        json row;
        row["bound_id"] = e.bound_id;
        row["side"] = to_string(e.side);
        row["value"] = number_or_null(e.value);
        row["applicable"] = e.applicable;
        row["satisfied"] = e.satisfied;
        row["margin"] = number_or_null(e.margin);
        if (!e.detail.empty())
            row["detail"] = e.detail;
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    out["all_satisfied"] = report.all_satisfied();
    return out;
}

json to_json(const FamilyInstance& family, const SharpnessRecord& record)
{
    json out;
    out["spec"] = {{"kind", to_string(family.spec.kind)}, {"n", family.spec.n}, {"t", family.spec.scale}};
    json roots = json::array();
    for (const auto& r : family.roots.roots)
        roots.push_back(json::array({r.real(), r.imag()}));
    out["roots"] = std::move(roots);
    out["sep"] = number_or_null(record.sep);
    out["mahler"] = number_or_null(record.mahler);
    out["log_mahler"] = number_or_null(record.log_mahler);
    out["ratio"] = number_or_null(record.ratio);
    return out;
}

json to_json(const LehmerWindow& window)
{
    return {{"n", window.n}, {"mu", window.mu}, {"lo", number_or_null(window.lo)}, {"hi", number_or_null(window.hi)}};
}

json to_json(const InequalityCheck& check)
{
    return {{"lhs", number_or_null(check.lhs)},
            {"rhs", number_or_null(check.rhs)},
            {"log_lhs", check.log_lhs},
            {"log_rhs", check.log_rhs},
            {"ok", check.ok}};
}

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_json(std::ostream& out, const json& j, int indent)
{
    write_value(out, j, indent, 0);
}

std::string dump_json(const json& j, int indent)
{
    std::ostringstream os;
    write_json(os, j, indent);
    return os.str();
}

}  // namespace msep
