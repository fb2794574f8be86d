// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <doctest.h>

#include "spikelab/error.hpp"

// Checks that `expr` throws spikelab::Error carrying `expected`.
#define CHECK_ERROR_CODE(expr, expected)                               \
  do {                                                                 \
    bool spikelab_thrown = false;                                      \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ::spikelab::Error& spikelab_error) {                \
      spikelab_thrown = true;                                          \
      CHECK_MESSAGE(spikelab_error.code() == (expected),               \
                    "got " << ::spikelab::to_string(spikelab_error.code())); \
    }                                                                  \
    CHECK_MESSAGE(spikelab_thrown, #expr " did not throw");            \
  } while (false)
