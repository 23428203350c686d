// Copyright 2026 The rouge2 Authors
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

// Umbrella header: the complete public surface of the library.
// Individual headers can be included directly for finer-grained builds;
// cli.hpp is excluded here because it pulls in the CLI11 dependency.

#pragma once

#include "rouge2/harness.hpp"
#include "rouge2/matching.hpp"
#include "rouge2/ngram.hpp"
#include "rouge2/score.hpp"
#include "rouge2/scoring.hpp"
#include "rouge2/synonym.hpp"
#include "rouge2/text.hpp"
#include "rouge2/topic.hpp"
