#pragma once

#include <string>
#include <vector>

#include "lieop/classify.hpp"
#include "lieop/towers.hpp"

namespace lieop {

inline constexpr const char* kToolName = "lieop";
inline constexpr const char* kToolVersion = "0.1.0";

struct InputStamp {
  std::string path;
  std::string digest;
};

/// Single self-describing structured document per run: tool, version,
/// command line, input digests, then the result payload.  Byte-identical
/// across identical invocations.
std::string structured_document(const std::string& command, const std::vector<InputStamp>& inputs,
                                const CheckReport& rep);
std::string structured_document(const std::string& command, const std::vector<InputStamp>& inputs,
                                const TowerReport& rep);
std::string structured_document(const std::string& command, const std::vector<InputStamp>& inputs,
                                const ClassificationReport& rep);

}  // namespace lieop
