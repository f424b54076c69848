#pragma once

#include <string>

#include <gtest/gtest.h>

#include "indrep/error.hpp"
#include "indrep/group_io.hpp"

#define EXPECT_ERROR(stmt, ecode)                                    \
  do {                                                               \
    try {                                                            \
      stmt;                                                          \
      ADD_FAILURE() << "expected " << indrep::error_code_name(ecode); \
    } catch (const indrep::Error& e) {                               \
      EXPECT_EQ(e.code(), ecode) << e.what();                        \
    }                                                                \
  } while (0)

namespace indrep::testing {

inline FiniteGroup group_from(const std::string& spec, const GroupOptions& opts = {}) {
  return build_group(parse_group_spec(spec), opts);
}

inline GroupPtr group_ptr(const std::string& spec) { return std::make_shared<const FiniteGroup>(group_from(spec)); }

}  // namespace indrep::testing
