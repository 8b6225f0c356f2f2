// Copyright 2026 The chordalm Authors.
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

#include "chordalm/catalog.hpp"
#include "chordalm/chordality.hpp"
#include "chordalm/constructions.hpp"
#include "chordalm/decompose.hpp"
#include "chordalm/detect.hpp"
#include "chordalm/element_set.hpp"
#include "chordalm/error.hpp"
#include "chordalm/gfq.hpp"
#include "chordalm/io.hpp"
#include "chordalm/matroid.hpp"
#include "chordalm/modularity.hpp"
#include "chordalm/peo.hpp"
#include "chordalm/projective.hpp"
