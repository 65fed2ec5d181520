#pragma once

#include "pmhopf/algebras.hpp"
#include "pmhopf/combinat.hpp"
#include "pmhopf/deform.hpp"
#include "pmhopf/dendriform.hpp"
#include "pmhopf/dims.hpp"
#include "pmhopf/freemodule.hpp"
#include "pmhopf/laws.hpp"
#include "pmhopf/matrices.hpp"
#include "pmhopf/report.hpp"
#include "pmhopf/smq.hpp"
#include "pmhopf/subquot.hpp"
#include "pmhopf/wordalg.hpp"
