#pragma once

namespace rgr {

// Version stamp written into every CSV/JSON artifact.
inline constexpr int kSchemaVersion = 1;

}  // namespace rgr
