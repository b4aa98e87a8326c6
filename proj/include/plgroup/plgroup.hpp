#pragma once

#include "plgroup/classcalc.hpp"
#include "plgroup/constructions.hpp"
#include "plgroup/io.hpp"
#include "plgroup/orbitals.hpp"
#include "plgroup/plmap.hpp"
#include "plgroup/plot.hpp"
#include "plgroup/rational.hpp"
#include "plgroup/session.hpp"
#include "plgroup/toweralg.hpp"
#include "plgroup/towers.hpp"
#include "plgroup/word.hpp"
#include "plgroup/wordlang.hpp"
