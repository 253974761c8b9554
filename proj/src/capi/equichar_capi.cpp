#include "equichar/equichar.h"

#include <new>

#include "equichar/document.hpp"

struct equichar_result {
  equichar::RunResult r;
};

namespace {

equichar_status finish(equichar::RunResult&& r, equichar_result** out) {
  const auto status = static_cast<equichar_status>(r.status);
  if (out) *out = new (std::nothrow) equichar_result{std::move(r)};
  return status;
}

equichar_status fail_early(const char* msg, equichar_result** out) {
  equichar::RunResult r;
  r.status = equichar::Status::ValidationError;
  r.error_kind = "Validation";
  r.message = msg;
  r.json = std::string("{\n  \"error\": \"Validation\",\n  \"message\": \"") + msg + "\"\n}\n";
  r.text = std::string("error (Validation): ") + msg + "\n";
  return finish(std::move(r), out);
}

const char* kEmpty = "";

}  // namespace

extern "C" {

const char* equichar_version(void) { return EQUICHAR_VERSION; }

equichar_status equichar_run(const char* verb, const char* input_json, equichar_result** out) {
  if (!verb || !input_json) return fail_early("verb and input must be non-null", out);
  try {
    return finish(equichar::run_document(verb, input_json), out);
  } catch (...) {
    if (out) *out = nullptr;
    return EQUICHAR_INTERNAL_ERROR;
  }
}

equichar_status equichar_oracle_selfcheck(uint64_t seed, int64_t count, int64_t sample_dim, int64_t max_dim,
                                          equichar_result** out) {
  if (count < 0 || sample_dim < 1 || max_dim < 1) return fail_early("count, sample_dim and max_dim out of range", out);
  try {
    equichar::oracle::SelfcheckConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    cfg.sample_dim = sample_dim;
    cfg.max_dim = max_dim;
    return finish(equichar::run_selfcheck_document(cfg), out);
  } catch (...) {
    if (out) *out = nullptr;
    return EQUICHAR_INTERNAL_ERROR;
  }
}

equichar_status equichar_result_status(const equichar_result* res) {
  return res ? static_cast<equichar_status>(res->r.status) : EQUICHAR_INTERNAL_ERROR;
}

const char* equichar_result_document(const equichar_result* res, equichar_format fmt) {
  if (!res) return kEmpty;
  return fmt == EQUICHAR_FORMAT_TEXT ? res->r.text.c_str() : res->r.json.c_str();
}

const char* equichar_result_message(const equichar_result* res) { return res ? res->r.message.c_str() : kEmpty; }

const char* equichar_result_error_kind(const equichar_result* res) { return res ? res->r.error_kind.c_str() : kEmpty; }

size_t equichar_result_entry_count(const equichar_result* res) { return res ? res->r.entries.size() : 0; }

int equichar_result_entry(const equichar_result* res, size_t idx, int64_t* socle, int64_t* length,
                          int64_t* multiplicity) {
  if (!res || idx >= res->r.entries.size()) return -1;
  const auto& e = res->r.entries[idx];
  if (socle) *socle = e[0];
  if (length) *length = e[1];
  if (multiplicity) *multiplicity = e[2];
  return 0;
}

void equichar_result_free(equichar_result* res) { delete res; }

}  // extern "C"
