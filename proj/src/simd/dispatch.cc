// Copyright 2026 The FairCC Authors
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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fcc/simd/kernels.hpp"

namespace fcc::simd {

#if defined(FCC_HAVE_AVX2)
const KernelTable& Avx2Kernels();
#endif

namespace {

bool ForcedScalar() {
  const char* env = std::getenv("FCC_SIMD");
  return env != nullptr && std::string(env) == "scalar";
}

const KernelTable& SelectKernels() {
  if (!ForcedScalar() && IsaSupported(Isa::kAvx2)) return KernelsFor(Isa::kAvx2);
  return ScalarKernels();
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool IsaSupported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(FCC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") &&
             __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& KernelsFor(Isa isa) {
  if (!IsaSupported(isa)) {
    throw std::invalid_argument("SIMD variant not available: " +
                                std::string(IsaName(isa)));
  }
#if defined(FCC_HAVE_AVX2)
  if (isa == Isa::kAvx2) return Avx2Kernels();
#endif
  return ScalarKernels();
}

const KernelTable& Kernels() {
  static const KernelTable& selected = SelectKernels();
  return selected;
}

}  // namespace fcc::simd
