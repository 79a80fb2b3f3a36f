// Copyright 2026 The cospec Authors
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

#include "cospec/charpoly.hpp"
#include "cospec/dot.hpp"
#include "cospec/equivalence.hpp"
#include "cospec/error.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"
#include "cospec/iso_search.hpp"
#include "cospec/matrix.hpp"
#include "cospec/report.hpp"
#include "cospec/search.hpp"
#include "cospec/spectrum.hpp"
#include "cospec/unfolding.hpp"
