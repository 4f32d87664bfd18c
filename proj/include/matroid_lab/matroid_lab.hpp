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


// Umbrella header.

#ifndef MATROID_LAB_MATROID_LAB_HPP_
#define MATROID_LAB_MATROID_LAB_HPP_

#include "matroid_lab/amalgam.hpp"
#include "matroid_lab/constructions.hpp"
#include "matroid_lab/cuts.hpp"
#include "matroid_lab/error.hpp"
#include "matroid_lab/generators.hpp"
#include "matroid_lab/io.hpp"
#include "matroid_lab/isomorphism.hpp"
#include "matroid_lab/matroid.hpp"
#include "matroid_lab/modularity.hpp"
#include "matroid_lab/parallel.hpp"
#include "matroid_lab/rank_table.hpp"
#include "matroid_lab/subset.hpp"

#endif  // MATROID_LAB_MATROID_LAB_HPP_
