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

#ifndef EPICORPUS_COMMON_RESOURCES_H_
#define EPICORPUS_COMMON_RESOURCES_H_

#include <string_view>
#include <vector>

namespace epicorpus {

// Files under data/ compiled into the library, keyed by their path relative
// to data/ (e.g. "lexicons/pronouns.txt"). Throws Error(kNotFound) for an
// unknown name.
std::string_view EmbeddedResource(std::string_view name);
std::vector<std::string_view> EmbeddedResourceNames();

}  // namespace epicorpus

#endif  // EPICORPUS_COMMON_RESOURCES_H_
