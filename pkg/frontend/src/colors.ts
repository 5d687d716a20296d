// Sentiment color classes, matching the engine's six-entry table exactly.

export const SENTIMENT_COLOR_CLASS: Record<string, string> = {
  happy: "orange",
  angry: "red",
  sad: "blue",
  fear: "violet",
  surprise: "yellow",
  neutral: "green",
};

// CSS fill per color class.
export const CLASS_FILL: Record<string, string> = {
  orange: "#f59f3b",
  red: "#d64541",
  blue: "#4a7fd4",
  violet: "#8e5bc0",
  yellow: "#e8d24b",
  green: "#63b577",
};

export function fillForColorClass(colorClass: string): string {
  const fill = CLASS_FILL[colorClass];
  if (!fill) {
    throw new Error(`unknown color class ${colorClass}`);
  }
  return fill;
}
