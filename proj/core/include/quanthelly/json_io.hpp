#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quanthelly/combinatorial.hpp"
#include "quanthelly/generators.hpp"
#include "quanthelly/helly.hpp"
#include "quanthelly/piercing.hpp"

namespace quanthelly {

// Text formats are JSON documents with a "schema" field. Scalars are
// written as exact "p/q" strings; numbers are accepted on input when they
// are integers.

std::string body_to_json(const ConvexBody& b);
ConvexBody body_from_json(std::string_view text);

std::string family_to_json(const Family& f);
Family family_from_json(std::string_view text);

std::string measure_to_json(const Measure& m);
Measure measure_from_json(std::string_view text);

// Generator fields use the GeneratorSpec names; "kind" is required.
GeneratorSpec generator_spec_from_json(std::string_view text);
std::string generator_spec_to_json(const GeneratorSpec& spec);

std::string certificate_to_json(const Family& f, const PiercingCertificate& cert);
std::string tverberg_to_json(const TverbergResult& r);
std::string selection_to_json(const SelectionResult& r);
std::string net_to_json(const NetResult& r);
std::string helly_report_to_json(const HellyReport& r);
std::string colorful_helly_to_json(const ColorfulHellyResult& r);
std::string floating_body_to_json(const FloatingBodyResult& r);

}  // namespace quanthelly
