#pragma once

#include "foulkes/class_function.hpp"
#include "foulkes/foulkes.hpp"
#include "foulkes/symfunc.hpp"
#include "foulkes/theorems.hpp"

#include <json.hpp>

#include <string>

namespace foulkes {

using Json = nlohmann::ordered_json;

/// {"degree": n, "terms": [{"mu": "2,1,1", "num": "...", "den": "..."}]}
Json to_json(const PSeries& f);
/// Throws InputError on a malformed document.
PSeries pseries_from_json(const Json& j);

/// {"degree": n, "values": [{"mu": "2,1,1", "value": "..."}]}
Json to_json(const ClassFunction& c);
ClassFunction class_function_from_json(const Json& j);

/// {"a": 3, "b": 4, "entries": [{"lambda": "6,3,2,1", "mult": 0}, ...]}
Json to_json(const FoulkesShape& s, const DecompositionTable& t);

/// Header `lambda,mult,dimension`; the lambda column is quoted.
std::string to_csv(const DecompositionTable& t);

/// {"a": 3, "b": 10, "total": N, "zero": 1909, "predicted": 492, "elapsed_ms": ...}
Json to_json(const CensusReport& r);

}  // namespace foulkes
