/*
graphmorph
Copyright 2026 graphmorph contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include "graphmorph/combmap.hpp"
#include "graphmorph/demos.hpp"
#include "graphmorph/drawing.hpp"
#include "graphmorph/generators.hpp"
#include "graphmorph/geometry.hpp"
#include "graphmorph/io.hpp"
#include "graphmorph/linsys.hpp"
#include "graphmorph/planar_morph.hpp"
#include "graphmorph/svg.hpp"
#include "graphmorph/tolerances.hpp"
#include "graphmorph/torus_morph.hpp"
#include "graphmorph/validate.hpp"
#include "graphmorph/weights.hpp"
