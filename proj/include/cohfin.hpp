/*
 *   Copyright 2026 The cohfin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "cohfin/bounded_dual.hpp"
#include "cohfin/category.hpp"
#include "cohfin/errors.hpp"
#include "cohfin/generators.hpp"
#include "cohfin/io.hpp"
#include "cohfin/law_report.hpp"
#include "cohfin/nonuniform.hpp"
#include "cohfin/prefix.hpp"
#include "cohfin/presented.hpp"
#include "cohfin/ramsey.hpp"
#include "cohfin/random.hpp"
#include "cohfin/relation.hpp"
#include "cohfin/set_family.hpp"
#include "cohfin/space.hpp"
#include "cohfin/vertex_set.hpp"
