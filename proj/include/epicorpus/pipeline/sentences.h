// Copyright 2026 The Epicorpus Authors.
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

#ifndef EPICORPUS_PIPELINE_SENTENCES_H_
#define EPICORPUS_PIPELINE_SENTENCES_H_

#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// Groups tokens into sentences. A sentence ends after a ".", "!" or "?"
// token (abbreviation tokens such as "Dr." never end one), absorbing any
// run of further terminators and closing quotes or brackets. Terminators
// inside a parenthetical of fewer than five tokens do not split. The
// returned sentences partition the token sequence.
std::vector<Sentence> SplitSentences(const std::vector<Token> &tokens);

}  // namespace epicorpus

#endif  // EPICORPUS_PIPELINE_SENTENCES_H_
