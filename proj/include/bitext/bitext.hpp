// Copyright 2026 The bitext-tools Authors
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

// Umbrella header.

#ifndef BITEXT_BITEXT_HPP
#define BITEXT_BITEXT_HPP

#include "bitext/corpus.hpp"
#include "bitext/filter.hpp"
#include "bitext/hash.hpp"
#include "bitext/json_io.hpp"
#include "bitext/metrics.hpp"
#include "bitext/modernize.hpp"
#include "bitext/moses_io.hpp"
#include "bitext/pipeline.hpp"
#include "bitext/rng.hpp"
#include "bitext/split.hpp"
#include "bitext/stats.hpp"
#include "bitext/tokenize.hpp"
#include "bitext/unicode.hpp"

#endif  // BITEXT_BITEXT_HPP
