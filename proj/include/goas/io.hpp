// Copyright 2026 The GOAS Solver Authors
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

#ifndef GOAS_IO_HPP_
#define GOAS_IO_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "goas/dp.hpp"
#include "goas/reductions.hpp"
#include "goas/tree.hpp"

namespace goas {

// Instance document, one record per line, '#' starts a comment:
//
//   goas-instance 1
//   root r
//   vertex r 0
//   vertex a 7/3
//   edge r a 0.5
//   budget 3
//   threshold 2
//   alphabet 1/2 3/2        (optional)
//
// Numbers are integers, finite decimals or "num/den"; all are exact.
// Vertex order fixes vertex indices; edge order fixes sibling order.
inline constexpr std::string_view kInstanceHeader = "goas-instance";
// Container document:
//
//   goas-containers 1
//   container c1 4
//   container c2 3 c1       (penetration list follows the cost)
//   target t1 9 c2
//   budget 10
//   threshold 5
inline constexpr std::string_view kContainerHeader = "goas-containers";
inline constexpr int kFormatVersion = 1;

// Throws Error(SyntaxError) with the line number, or the build_instance
// error for semantically invalid trees.
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& inst);

ContainerModel ParseContainerModel(std::string_view text);
std::string SerializeContainerModel(const ContainerModel& model);

// Dispatches on the header line; container documents are converted with
// ContainersToTree.
Instance ParseAnyDocument(std::string_view text);

// Reads a whole file; throws Error(InvalidArgument) if it cannot be opened.
std::string ReadFile(const std::string& path);

// Line-oriented "key=value" form carrying every SolveResult field.
std::string FormatStructured(const Instance& inst, const SolveResult& result);
// Human-readable summary with the same numbers.
std::string FormatText(const Instance& inst, const SolveResult& result);

}  // namespace goas

#endif  // GOAS_IO_HPP_
