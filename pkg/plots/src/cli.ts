#!/usr/bin/env node
// render_figure --csv <path> --figure {2|3|4} --out <path.svg>
//
// Exit codes: 0 ok, 2 csv schema mismatch, 3 csv parses but holds no
// plottable rows, 1 anything else (unreadable file, bad flags).

import * as fs from "fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { renderFigure, FigureId } from "./render";
import { SchemaError, EmptyDataError } from "./schema";

function main(): void {
  const argv = yargs(hideBin(process.argv))
    .scriptName("render_figure")
    .usage("$0 --csv <path> --figure {2|3|4} --out <path.svg>")
    .option("csv", { type: "string", demandOption: true, describe: "sweep CSV from the cylcas CLI" })
    .option("figure", { type: "number", demandOption: true, choices: [2, 3, 4], describe: "figure layout to render" })
    .option("out", { type: "string", demandOption: true, describe: "output SVG path" })
    .option("log-x", { type: "boolean", default: false, describe: "log-scale x axis (figures 2 and 3)" })
    .strict()
    .parseSync();

  let text: string;
  try {
    text = fs.readFileSync(argv.csv, "utf8");
  } catch (err) {
    process.stderr.write(`error: cannot read ${argv.csv}: ${(err as Error).message}\n`);
    process.exit(1);
  }

  let svg: string;
  try {
    svg = renderFigure(text, argv.figure as FigureId, { logX: argv["log-x"] });
  } catch (err) {
    if (err instanceof SchemaError) {
      process.stderr.write(`error: ${err.message}\n`);
      process.exit(2);
    }
    if (err instanceof EmptyDataError) {
      process.stderr.write(`error: ${err.message}\n`);
      process.exit(3);
    }
    throw err;
  }

  fs.writeFileSync(argv.out, svg);
}

try {
  main();
} catch (err) {
  process.stderr.write(`error: ${(err as Error).message}\n`);
  process.exit(1);
}
