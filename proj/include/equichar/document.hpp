#pragma once

// JSON documents in and out: parses an input record for one of the verbs,
// runs it and renders the result as JSON or plain text. Errors are caught
// and turned into a status code with a message.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equichar/error.hpp"
#include "equichar/oracle/selfcheck.hpp"

namespace equichar {

enum class Status : int { Ok = 0, ValidationError = 2, DomainError = 3, InternalError = 4 };

Status status_for(ErrorKind kind) noexcept;

/// Input bounds for documents.
struct Limits {
  Int max_group_order = Int{1} << 20;  // p^n
  Int max_c = Int{1} << 16;
  Int max_points = 10000;
};

struct RunResult {
  Status status = Status::Ok;
  std::string error_kind;  // empty on success
  std::string message;
  std::string json;
  std::string text;
  std::vector<std::array<Int, 3>> entries;  // (socle, length, multiplicity), sorted as in the document
};

/// verb is one of "cyclic", "semidirect", "superelliptic", "validate".
/// "validate" takes the mode from the document's "mode" field; the others
/// accept it optionally and reject a mismatch.
RunResult run_document(std::string_view verb, std::string_view input_json, const Limits& limits = {});

RunResult run_selfcheck_document(const oracle::SelfcheckConfig& config);

}  // namespace equichar
