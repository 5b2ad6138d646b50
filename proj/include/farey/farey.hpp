#pragma once

#include "farey/checked.hpp"
#include "farey/error.hpp"
#include "farey/fraction.hpp"
#include "farey/invariants.hpp"
#include "farey/sequence.hpp"
#include "farey/stream.hpp"
#include "farey/totient.hpp"
