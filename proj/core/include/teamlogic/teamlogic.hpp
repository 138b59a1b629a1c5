#pragma once

#include "teamlogic/bisimulation.hpp"
#include "teamlogic/characteristic.hpp"
#include "teamlogic/closure.hpp"
#include "teamlogic/enumerate.hpp"
#include "teamlogic/errors.hpp"
#include "teamlogic/formula.hpp"
#include "teamlogic/game.hpp"
#include "teamlogic/kripke.hpp"
#include "teamlogic/model_io.hpp"
#include "teamlogic/rewrite.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/syntax.hpp"
#include "teamlogic/team.hpp"
