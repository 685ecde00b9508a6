#pragma once

#include "lfnerve/error.hpp"
#include "lfnerve/partition.hpp"
#include "lfnerve/twocat.hpp"
#include "lfnerve/laxfun.hpp"
#include "lfnerve/simpl.hpp"
#include "lfnerve/nerve.hpp"
#include "lfnerve/cohom.hpp"
#include "lfnerve/io.hpp"
#include "lfnerve/cli.hpp"
