#pragma once

#include <cstdint>

namespace rti {

// 1-based position counted from the right (first-read) end of the text:
// the symbol read at step i sits at position i.
using Position = uint64_t;

// Alphabet symbol (base or meta). Valid symbols are < alphabet size.
using Symbol = uint32_t;

// Color of a list element. By convention clients use 0 for structural
// elements, but it is an ordinary queryable color.
using Color = uint32_t;

}  // namespace rti
