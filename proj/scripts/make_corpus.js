// Regenerates the PGN test corpora and their oracle FEN files under tests/data/.
// Games are random legal playouts produced and validated by chess.js, so the
// frozen final positions come from an implementation independent of this repo.
//
// Usage: npm install chess.js && node scripts/make_corpus.js <out_dir>

'use strict';

const fs = require('fs');
const path = require('path');
const { Chess } = require('chess.js');

function mulberry32(seed) {
  let a = seed >>> 0;
  return function () {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

// chess.js omits the en-passant FEN field unless a capture is actually legal.
// The corpus uses the plain FEN convention instead: the field is set after
// every two-square pawn push.
function finalFen(game) {
  const fen = game.fen().split(' ');
  const hist = game.history({ verbose: true });
  if (hist.length > 0) {
    const last = hist[hist.length - 1];
    if (last.piece === 'p' && Math.abs(last.from.charCodeAt(1) - last.to.charCodeAt(1)) === 2) {
      fen[3] = last.from[0] + String.fromCharCode((last.from.charCodeAt(1) + last.to.charCodeAt(1)) / 2);
    }
  }
  return fen.join(' ');
}

function playRandom(rng, maxPlies) {
  const game = new Chess();
  for (let ply = 0; ply < maxPlies && !game.isGameOver(); ply++) {
    const moves = game.moves();
    // Castle eagerly so the corpus actually exercises castling.
    const castles = moves.filter((m) => m.startsWith('O-O'));
    const pick = castles.length > 0 && rng() < 0.5 ? castles : moves;
    game.move(pick[Math.floor(rng() * pick.length)]);
  }
  return game;
}

function scripted(moves) {
  const game = new Chess();
  for (const m of moves) {
    game.move(m); // throws on an illegal move, keeping the corpus honest
  }
  return game;
}

function resultTag(game) {
  if (game.isCheckmate()) return game.turn() === 'w' ? '0-1' : '1-0';
  if (game.isDraw()) return '1/2-1/2';
  return '*';
}

function toPgn(game, index) {
  const result = resultTag(game);
  const tags = [
    `[Event "Corpus game ${index + 1}"]`,
    '[Site "generated"]',
    '[Date "2024.01.01"]',
    `[Round "${index + 1}"]`,
    '[White "gen"]',
    '[Black "gen"]',
    `[Result "${result}"]`,
  ];
  const sans = game.history();
  const parts = [];
  for (let i = 0; i < sans.length; i++) {
    if (i % 2 === 0) parts.push(`${i / 2 + 1}.`);
    parts.push(sans[i]);
  }
  parts.push(result);
  // Wrap movetext at 80 columns, as PGN exporters usually do.
  let line = '';
  const lines = [];
  for (const p of parts) {
    if (line.length > 0 && line.length + 1 + p.length > 80) {
      lines.push(line);
      line = p;
    } else {
      line = line.length === 0 ? p : line + ' ' + p;
    }
  }
  if (line.length > 0) lines.push(line);
  return tags.join('\n') + '\n\n' + lines.join('\n') + '\n';
}

// Hand-picked move lists covering promotion, under-promotion, en passant,
// both castlings and SAN disambiguation.
const SCRIPTED = [
  ['e4', 'd5', 'exd5', 'c6', 'dxc6', 'Nf6', 'cxb7', 'e5', 'bxa8=Q', 'e4', 'Qxb8', 'e3', 'dxe3'],
  ['e4', 'a6', 'e5', 'd5', 'exd6', 'exd6', 'd4', 'd5', 'Nf3', 'a5', 'Ne5', 'a4', 'b4', 'axb3', 'axb3', 'Rxa1'],
  ['Nf3', 'Nf6', 'g3', 'g6', 'Bg2', 'Bg7', 'O-O', 'O-O', 'd4', 'd5', 'Nbd2', 'Nbd7'],
  ['d4', 'd5', 'Nc3', 'Nc6', 'Bf4', 'Bf5', 'Qd2', 'Qd7', 'O-O-O', 'O-O-O', 'Nf3', 'Nf6'],
  ['e4', 'e5', 'Nf3', 'Nc6', 'Bc4', 'Bc5', 'O-O', 'Nf6', 'Re1', 'O-O', 'c3', 'd6', 'd4', 'exd4', 'cxd4', 'Bb6'],
  ['a4', 'h5', 'a5', 'h4', 'a6', 'h3', 'axb7', 'hxg2', 'bxa8=N', 'gxh1=B', 'Nf3', 'Nh6', 'Nb6', 'Bxf3', 'exf3', 'Rh7'],
  ['e4', 'c5', 'Nf3', 'd6', 'd4', 'cxd4', 'Nxd4', 'Nf6', 'Nc3', 'a6', 'Be3', 'e5', 'Nb3', 'Be6', 'f3', 'Be7', 'Qd2', 'O-O', 'O-O-O', 'Nbd7'],
  ['a4', 'e5', 'Ra3', 'Bc5', 'h4', 'd6', 'Rhh3', 'Nf6', 'e3', 'Nbd7', 'Qe2', 'O-O', 'd3', 'Re8'],
];

function writeCorpus(dir, name, games) {
  fs.writeFileSync(path.join(dir, `${name}.pgn`), games.map((g, i) => toPgn(g, i)).join('\n'));
  fs.writeFileSync(path.join(dir, `${name}_fens.txt`), games.map((g) => finalFen(g)).join('\n') + '\n');
  const plies = games.reduce((acc, g) => acc + g.history().length, 0);
  console.log(`${name}: ${games.length} games, ${plies} plies`);
}

function main() {
  const outDir = process.argv[2] || path.join(__dirname, '..', 'tests', 'data');
  fs.mkdirSync(outDir, { recursive: true });

  const rng = mulberry32(20240101);
  const big = SCRIPTED.map(scripted);
  while (big.length < 200) {
    big.push(playRandom(rng, 24 + Math.floor(rng() * 32)));
  }
  writeCorpus(outDir, 'corpus_200', big);

  const short = [];
  const rng2 = mulberry32(777);
  while (short.length < 50) {
    short.push(playRandom(rng2, 8));
  }
  writeCorpus(outDir, 'corpus_50_short', short);
}

main();
