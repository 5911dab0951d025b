#pragma once

#include <gtest/gtest.h>

#include "schubert/error.hpp"

// Checks that `stmt` throws schubert::Error of the given kind and, when
// given, with exactly these labels.
#define EXPECT_SCHUBERT_ERROR(stmt, expected_kind, ...)                                      \
  do {                                                                                      \
    try {                                                                                   \
      stmt;                                                                                 \
      ADD_FAILURE() << "no error from: " #stmt;                                             \
    } catch (const schubert::Error& e) {                                                    \
      EXPECT_EQ(e.kind(), schubert::ErrorKind::expected_kind) << e.what();                  \
      const std::vector<std::string> expected_labels{__VA_ARGS__};                           \
      if (!expected_labels.empty()) {                                                       \
        EXPECT_EQ(e.labels(), expected_labels) << e.what();                                 \
      }                                                                                     \
    }                                                                                       \
  } while (0)
