#pragma once

namespace fixleads
{

inline constexpr const char* version = "0.1.0";

} // namespace fixleads
