// Copyright 2026 The Stylomark Authors.
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


// Umbrella header.

#ifndef STYLOMARK_STYLOMARK_HPP_
#define STYLOMARK_STYLOMARK_HPP_

#include "stylomark/attack.hpp"
#include "stylomark/detector.hpp"
#include "stylomark/error.hpp"
#include "stylomark/eval.hpp"
#include "stylomark/generator.hpp"
#include "stylomark/hash.hpp"
#include "stylomark/keystream.hpp"
#include "stylomark/normalizer.hpp"
#include "stylomark/norms.hpp"
#include "stylomark/plot.hpp"
#include "stylomark/redgreen.hpp"
#include "stylomark/stats.hpp"
#include "stylomark/text_core.hpp"
#include "stylomark/toy_model.hpp"
#include "stylomark/vocabulary.hpp"

#endif  // STYLOMARK_STYLOMARK_HPP_
