#pragma once

#include "wwmtc/design.hpp"
#include "wwmtc/elastica.hpp"
#include "wwmtc/elliptic.hpp"
#include "wwmtc/errors.hpp"
#include "wwmtc/muscle.hpp"
#include "wwmtc/tendon.hpp"
#include "wwmtc/winch.hpp"
