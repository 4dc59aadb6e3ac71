// Copyright 2026 The Warehouse Solver Authors
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

#pragma once

#include "warehouse/error.hpp"
#include "warehouse/extform.hpp"
#include "warehouse/fptas.hpp"
#include "warehouse/generators.hpp"
#include "warehouse/io.hpp"
#include "warehouse/model.hpp"
#include "warehouse/network.hpp"
#include "warehouse/oracle.hpp"
#include "warehouse/rational.hpp"
#include "warehouse/stock_levels.hpp"
