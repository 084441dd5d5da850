#ifndef MAHLERSEP_IO_HPP
#define MAHLERSEP_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "mahlersep/bounds.hpp"
#include "mahlersep/families.hpp"
#include "mahlersep/poly.hpp"

namespace msep {

/// Coefficients as {"coeffs": [c0, ..., cn]} or a bare array. Entries may be
/// JSON numbers, decimal strings (integer strings keep full precision), or
/// [re, im] pairs.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Roots as {"roots": [[re, im], ...]} or a bare array of pairs/numbers.
RootSet roots_from_json(const nlohmann::json& j);

/// Either kind of input document; exactly one member is set.
struct AnalysisInput {
    std::optional<Polynomial> polynomial;
    std::optional<RootSet> roots;
};

AnalysisInput input_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const FamilyInstance& family, const SharpnessRecord& record);
nlohmann::json to_json(const LehmerWindow& window);
nlohmann::json to_json(const InequalityCheck& check);

/// "%.17g"; "nan"/"inf"/"-inf" for non-finite values.
std::string format_number(double value);

/// Serializes with every float at 17 significant digits. Non-finite floats
/// become null.
void write_json(std::ostream& out, const nlohmann::json& j, int indent = 2);
std::string dump_json(const nlohmann::json& j, int indent = 2);

}  // namespace msep

#endif  // MAHLERSEP_IO_HPP
