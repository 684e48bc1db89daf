#pragma once

#include "dvs/armor.hpp"
#include "dvs/context.hpp"
#include "dvs/error.hpp"
#include "dvs/group.hpp"
#include "dvs/keys.hpp"
#include "dvs/lee_chang.hpp"
#include "dvs/modmath.hpp"
#include "dvs/msghash.hpp"
#include "dvs/oracle.hpp"
#include "dvs/pv.hpp"
#include "dvs/random.hpp"
#include "dvs/saeednia.hpp"
#include "dvs/signatures.hpp"
#include "dvs/udvs.hpp"
#include "dvs/wire.hpp"
