#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <variant>

#include "matstar/axioms.hpp"
#include "matstar/classify.hpp"
#include "matstar/linear_map.hpp"
#include "matstar/tensor.hpp"
#include "matstar/verification.hpp"

namespace matstar {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Error(Parse) with line and column.
Json parse_json(std::string_view text);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Sparse: one {"left","right","out","coeff"} object per nonzero coefficient.
Json to_json(const StructureTensor& t);
StructureTensor tensor_from_json(const Json& j);

/// {"field", "n", "orientation": "standard", "g": n^2 x n^2 table}
Json to_json(const LinearMapG& g);
LinearMapG linear_map_from_json(const Json& j);

/// A check input is either a tensor or a linear map, told apart by schema.
using ProductInput = std::variant<StructureTensor, LinearMapG>;
ProductInput product_input_from_json(const Json& j);

Json to_json(const AxiomReport& r);
Json to_json(const LambdaZReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const CharacteristicTwoFinding& f);
Json to_json(const SuiteReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace matstar
