// Copyright 2026 The frobcode Authors
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


#pragma once

#include "frobcode/codegen.hpp"
#include "frobcode/cyclotomic.hpp"
#include "frobcode/decode.hpp"
#include "frobcode/embedding.hpp"
#include "frobcode/errors.hpp"
#include "frobcode/galois.hpp"
#include "frobcode/numtheory.hpp"
#include "frobcode/polyring.hpp"
#include "frobcode/serialize.hpp"
#include "frobcode/stab.hpp"
#include "frobcode/survey.hpp"
#include "frobcode/tables.hpp"
