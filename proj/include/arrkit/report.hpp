#pragma once

#include <json.hpp>

#include "arrkit/classify.hpp"
#include "arrkit/theorems.hpp"

namespace arrkit {

using Json = nlohmann::ordered_json;

Json to_json(const ClassificationReport& r);
Json to_json(const TripleReport& r);
Json to_json(const DivisionReport& r);
Json to_json(const MatBchReport& r);
Json to_json(const RelativeReport& r);
Json to_json(const AdditionReport& r);
Json to_json(const FiltrationResult& r);
Json to_json(const FreeAdditionsReport& r);
Json to_json(const CombinatorialDeletionReport& r);
Json to_json(const ConjectureScan& r);
Json to_json(const YoshinagaReport& r);
Json to_json(const RestrictionBoundReport& r);

}  // namespace arrkit
