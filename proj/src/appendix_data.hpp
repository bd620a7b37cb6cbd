#pragma once

#include <vector>

namespace vt {

// Transcriptions of the worked-out listings used as acceptance fixtures:
// vacillating tableaux of length 5 from (3) to (3), length 5 from (3) to
// (1,1,1), and length 3 from (2,1) to (2,1).
const std::vector<const char*>& appendix_listing(char which);  // 'A', 'B', 'C'

}  // namespace vt
