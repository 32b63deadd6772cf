// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_EXAMPLE_SCRIPT_HPP
#define AGORA_EXAMPLE_SCRIPT_HPP

namespace agora {

// Text of scripts/risk-x.agora, embedded at configure time.
extern const char* const kExampleScript;

}  // namespace agora

#endif  // AGORA_EXAMPLE_SCRIPT_HPP
