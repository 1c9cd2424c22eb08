#pragma once

#include <string>
#include <variant>

#include "punct/structures.hpp"

namespace punct {

using AnyStructure = std::variant<FinitePosetTree, RpoTree, SuccessorTree, PrefixTree>;

/// Line-oriented text format: header `kind=<poset|rpo|succ|prefix> n=<count>`,
/// then one relation tuple per line.  Round-trips bit-exactly.
std::string serialize(const FinitePosetTree& t);
std::string serialize(const RpoTree& t);
std::string serialize(const SuccessorTree& t);
std::string serialize(const PrefixTree& t);
std::string serialize(const AnyStructure& s);

Checked<AnyStructure> parseStructure(const std::string& text);

}  // namespace punct
