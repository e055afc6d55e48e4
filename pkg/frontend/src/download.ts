/** File download, with the browser sink injectable for tests. */

export interface DownloadSink {
  (filename: string, content: string, mediaType: string): void;
}

export const browserDownload: DownloadSink = (filename, content, mediaType) => {
  const blob = new Blob([content], { type: mediaType });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  document.body.append(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
};
