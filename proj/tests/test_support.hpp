// Copyright 2026 The ctxmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXMEASURE_TESTS_TEST_SUPPORT_HPP
#define CTXMEASURE_TESTS_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ctxmeasure/ctxmeasure.hpp"

namespace ctxm::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline OutcomeSpace binary_space(std::size_t arity) {
  return OutcomeSpace(std::vector<Alphabet>(arity, binary_alphabet()));
}

/// +-1 Pmf of one variable.
inline Pmf coin(const Rational& mean) { return binary_pmf(mean); }

inline Pmf pair(const Rational& m1, const Rational& m2, const Rational& product) {
  return pmf_from_stats({m1, m2, product});
}

inline std::string data_path(const std::string& name) { return std::string(CTXM_DATA_DIR) + "/" + name; }

}  // namespace ctxm::testing

#define EXPECT_CTXM_ERROR(statement, errc)                              \
  do {                                                                  \
    try {                                                               \
      statement;                                                        \
      ADD_FAILURE() << "expected " << ::ctxm::errc_name(errc);          \
    } catch (const ::ctxm::Error& e) {                                  \
      EXPECT_EQ(e.code(), errc) << e.what();                            \
    }                                                                   \
  } while (false)

#endif  // CTXMEASURE_TESTS_TEST_SUPPORT_HPP
