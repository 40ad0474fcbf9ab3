#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rootnum/engine.hpp"

namespace rootnum {

/// One computed (or refused) curve, as emitted by the CLI and Python API.
struct OutputRecord {
  Integer p;
  Integer a;
  bool supported = true;
  std::string status = "ok";  // "ok" or an error name
  std::string message;
  std::optional<GlobalResult> result;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Runs the engine and captures library errors as a status.
OutputRecord compute_record(const Integer& p, const Integer& a,
                            const EngineOptions& options = {});

/// Keys: p, a, supported, status, message, global, factors, model.
/// Integers are JSON numbers when they fit in int64, else decimal strings.
nlohmann::json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& j);

std::string render_table(const OutputRecord& record);

}  // namespace rootnum
